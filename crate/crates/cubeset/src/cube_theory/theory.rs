use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the optional structure symbols of a cube category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// Positive connections `a ∧ b`.
    Meet,
    /// Negative connections `a ∨ b`.
    Join,
    /// Transpositions of adjacent coordinates.
    Sigma,
    /// Reversals `a ↦ 1 - a`.
    Rho,
    /// Diagonals duplicating a coordinate.
    Delta,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [
        Symbol::Meet,
        Symbol::Join,
        Symbol::Sigma,
        Symbol::Rho,
        Symbol::Delta,
    ];

    fn bit(self) -> u8 {
        match self {
            Symbol::Meet => 1,
            Symbol::Join => 2,
            Symbol::Sigma => 4,
            Symbol::Rho => 8,
            Symbol::Delta => 16,
        }
    }

    /// Serialization name.
    pub fn name(self) -> &'static str {
        match self {
            Symbol::Meet => "meet",
            Symbol::Join => "join",
            Symbol::Sigma => "sigma",
            Symbol::Rho => "rho",
            Symbol::Delta => "delta",
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            Symbol::Meet => "∧",
            Symbol::Join => "∨",
            Symbol::Sigma => "Σ",
            Symbol::Rho => "ρ",
            Symbol::Delta => "δ",
        }
    }

    fn parse(token: &str) -> Option<Theory> {
        let t = token.trim().to_lowercase();
        let syms: &[Symbol] = match t.as_str() {
            "meet" | "and" | "∧" => &[Symbol::Meet],
            "join" | "or" | "∨" => &[Symbol::Join],
            "meetjoin" => &[Symbol::Meet, Symbol::Join],
            "sigma" | "sym" | "σ" => &[Symbol::Sigma],
            "rho" | "rev" | "ρ" => &[Symbol::Rho],
            "delta" | "diag" | "δ" => &[Symbol::Delta],
            "none" | "empty" | "∅" | "" => &[],
            "poset" | "p" => return Some(Theory::POSET),
            "full" | "s" => return Some(Theory::FULL),
            _ => return None,
        };
        Some(Theory::new(syms.iter().copied()))
    }
}

/// A cube-category signature: a set of symbols closed under the rule that
/// reversals together with one kind of connection imply the other kind.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Theory(u8);

impl Theory {
    pub const EMPTY: Theory = Theory(0);
    pub const MEET: Theory = Theory(1);
    pub const JOIN: Theory = Theory(2);
    pub const MEET_JOIN: Theory = Theory(3);
    /// `{∧, ∨, Σ, δ}`: all monotone maps.
    pub const POSET: Theory = Theory(1 | 2 | 4 | 16);
    /// All symbols: all functions.
    pub const FULL: Theory = Theory(31);

    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Theory {
        let mut bits = 0u8;
        for s in symbols {
            bits |= s.bit();
        }
        Theory(Self::normalize(bits))
    }

    fn normalize(mut bits: u8) -> u8 {
        let rho = Symbol::Rho.bit();
        let conn = Symbol::Meet.bit() | Symbol::Join.bit();
        if bits & rho != 0 && bits & conn != 0 {
            bits |= conn;
        }
        bits
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.0 & s.bit() != 0
    }

    pub fn symbols(self) -> impl Iterator<Item = Symbol> {
        Symbol::ALL.into_iter().filter(move |s| self.contains(*s))
    }

    pub fn is_subtheory_of(self, other: Theory) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, s: Symbol) -> Theory {
        Theory(Self::normalize(self.0 | s.bit()))
    }

    /// Theories inside `{∧, ∨}`, which carry an Eilenberg–Zilber structure.
    pub fn is_ez(self) -> bool {
        self.is_subtheory_of(Theory::MEET_JOIN)
    }

    /// Every member map is monotone.
    pub fn is_monotone(self) -> bool {
        !self.contains(Symbol::Rho)
    }

    /// Sorted symbol names, the serialized form.
    pub fn names(self) -> Vec<&'static str> {
        let mut v: Vec<_> = self.symbols().map(Symbol::name).collect();
        v.sort_unstable();
        v
    }

    /// Every theory, in a stable order.
    pub fn all() -> Vec<Theory> {
        let mut v: Vec<Theory> = (0u8..32).map(|b| Theory(Self::normalize(b))).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Debug for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Theory({self})")
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("∅");
        }
        let glyphs: Vec<_> = self.symbols().map(Symbol::glyph).collect();
        write!(f, "{{{}}}", glyphs.join(","))
    }
}

/// Accepts comma- or plus-separated tokens such as `meet,sigma`,
/// `meetjoin`, `none`, `poset` (or `P`) and `full`.
impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theory> {
        let mut acc = Theory::EMPTY;
        for tok in s.split([',', '+']) {
            let t = Symbol::parse(tok).ok_or_else(|| Error::Parse(format!("unknown theory token `{tok}`")))?;
            acc = Theory(Self::normalize(acc.0 | t.0));
        }
        Ok(acc)
    }
}

impl Serialize for Theory {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.names().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Theory {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Theory, D::Error> {
        let names = Vec::<String>::deserialize(d)?;
        let mut acc = Theory::EMPTY;
        for n in &names {
            let sym = Symbol::ALL
                .into_iter()
                .find(|s| s.name() == n)
                .ok_or_else(|| serde::de::Error::custom(format!("unknown symbol `{n}`")))?;
            acc = acc.with(sym);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversal_forces_both_connections() {
        let t = Theory::new([Symbol::Rho, Symbol::Meet]);
        assert!(t.contains(Symbol::Join));
        let t = Theory::new([Symbol::Rho, Symbol::Join]);
        assert!(t.contains(Symbol::Meet));
        let t = Theory::new([Symbol::Rho]);
        assert!(!t.contains(Symbol::Meet));
    }

    #[test]
    fn parse_and_serialize() {
        let t: Theory = "meet,sym".parse().unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"["meet","sigma"]"#);
        assert_eq!("P".parse::<Theory>().unwrap(), Theory::POSET);
        assert_eq!("none".parse::<Theory>().unwrap(), Theory::EMPTY);
        assert_eq!("meetjoin".parse::<Theory>().unwrap(), Theory::MEET_JOIN);
        let back: Theory = serde_json::from_str(r#"["sigma","meet"]"#).unwrap();
        assert_eq!(back, t);
        assert!("bogus".parse::<Theory>().is_err());
    }

    #[test]
    fn all_theories_are_normalized() {
        let all = Theory::all();
        assert_eq!(all.len(), 24);
        for t in all {
            assert_eq!(t.0, Theory::normalize(t.0));
        }
    }
}
