use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::theory::{Symbol, Theory};
use crate::error::{Error, Result};

/// Largest dimension a table-level map may have on either side.
pub const MAX_DIM: usize = 16;

/// Coordinate `i` (1-based, coordinate 1 most significant) of the vertex `v` of `{0,1}^n`.
#[inline]
pub fn coord(v: u32, n: usize, i: usize) -> u8 {
    ((v >> (n - i)) & 1) as u8
}

/// The coordinates of a vertex code, coordinate 1 first.
pub fn decode(v: u32, n: usize) -> Vec<u8> {
    (1..=n).map(|i| coord(v, n, i)).collect()
}

/// Inverse of [`decode`].
pub fn encode(bits: &[u8]) -> u32 {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as u32)
}

/// A vertex of `{0,1}^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    dim: u8,
    code: u32,
}

impl Vertex {
    pub fn new(bits: &[u8]) -> Result<Vertex> {
        if bits.len() > MAX_DIM {
            return Err(Error::BoundsExceeded(format!("vertex dimension {}", bits.len())));
        }
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidSide(b));
        }
        Ok(Vertex { dim: bits.len() as u8, code: encode(bits) })
    }

    /// The vertex with code `code` in lexicographic order.
    pub fn from_code(dim: usize, code: u32) -> Result<Vertex> {
        if dim > MAX_DIM || (code as u64) >= (1u64 << dim) {
            return Err(Error::InvalidTable(format!("vertex code {code} in dimension {dim}")));
        }
        Ok(Vertex { dim: dim as u8, code })
    }

    pub fn zeros(dim: usize) -> Vertex {
        Vertex { dim: dim as u8, code: 0 }
    }

    pub fn ones(dim: usize) -> Vertex {
        Vertex { dim: dim as u8, code: ((1u64 << dim) - 1) as u32 }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn bits(&self) -> Vec<u8> {
        decode(self.code, self.dim())
    }

    pub fn get(&self, i: usize) -> u8 {
        coord(self.code, self.dim(), i)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// A function `{0,1}^m → {0,1}^n`, stored as the table of images of the
/// domain vertices in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeMap {
    m: u8,
    n: u8,
    table: Vec<u32>,
}

impl CubeMap {
    pub fn new(m: usize, n: usize, table: Vec<u32>) -> Result<CubeMap> {
        if m > MAX_DIM || n > MAX_DIM {
            return Err(Error::BoundsExceeded(format!("map dimensions {m}→{n}")));
        }
        if table.len() != 1usize << m {
            return Err(Error::InvalidTable(format!(
                "expected {} entries for domain dimension {m}, got {}",
                1usize << m,
                table.len()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| (v as u64) >= (1u64 << n)) {
            return Err(Error::InvalidTable(format!("entry {v} out of range for codomain dimension {n}")));
        }
        Ok(CubeMap { m: m as u8, n: n as u8, table })
    }

    pub fn from_vertices(m: usize, n: usize, table: &[Vertex]) -> Result<CubeMap> {
        if let Some(v) = table.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
        }
        CubeMap::new(m, n, table.iter().map(Vertex::code).collect())
    }

    /// Build from a function on vertex codes.
    pub fn from_fn(m: usize, n: usize, f: impl Fn(u32) -> u32) -> CubeMap {
        let table = (0..1u32 << m).map(f).collect();
        CubeMap { m: m as u8, n: n as u8, table }
    }

    /// Build from a function on coordinate vectors.
    pub fn from_coords(m: usize, n: usize, f: impl Fn(&[u8]) -> Vec<u8>) -> CubeMap {
        CubeMap::from_fn(m, n, |v| {
            let out = f(&decode(v, m));
            debug_assert_eq!(out.len(), n);
            encode(&out)
        })
    }

    pub fn identity(n: usize) -> CubeMap {
        CubeMap::from_fn(n, n, |v| v)
    }

    pub fn constant(m: usize, value: Vertex) -> CubeMap {
        CubeMap::from_fn(m, value.dim(), |_| value.code())
    }

    pub fn dom(&self) -> usize {
        self.m as usize
    }

    pub fn cod(&self) -> usize {
        self.n as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        self.table[v as usize]
    }

    pub fn eval(&self, v: Vertex) -> Result<Vertex> {
        if v.dim() != self.dom() {
            return Err(Error::DimensionMismatch { expected: self.dom(), found: v.dim() });
        }
        Ok(Vertex { dim: self.n, code: self.apply(v.code()) })
    }

    pub fn is_identity(&self) -> bool {
        self.m == self.n && self.table.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self ∘ f`, that is, `f` first.
    pub fn after(&self, f: &CubeMap) -> Result<CubeMap> {
        if f.cod() != self.dom() {
            return Err(Error::DimensionMismatch { expected: self.dom(), found: f.cod() });
        }
        Ok(self.after_unchecked(f))
    }

    pub(crate) fn after_unchecked(&self, f: &CubeMap) -> CubeMap {
        debug_assert_eq!(f.cod(), self.dom());
        let table = f.table.iter().map(|&v| self.table[v as usize]).collect();
        CubeMap { m: f.m, n: self.n, table }
    }

    /// The map acting as `self` on the first coordinates and `g` on the rest.
    pub fn tensor(&self, g: &CubeMap) -> CubeMap {
        let (p, q) = (g.dom(), g.cod());
        let mask = (1u32 << p) - 1;
        CubeMap::from_fn(self.dom() + p, self.cod() + q, |v| {
            (self.table[(v >> p) as usize] << q) | g.table[(v & mask) as usize]
        })
    }

    /// Truth table of output coordinate `i`, bit `v` set iff `f(v)_i = 1`.
    pub fn coordinate(&self, i: usize) -> u64 {
        let n = self.cod();
        self.table
            .iter()
            .enumerate()
            .fold(0u64, |acc, (v, &w)| acc | ((coord(w, n, i) as u64) << v))
    }

    /// Monotone for the product order on vertices.
    pub fn is_monotone(&self) -> bool {
        let m = self.dom();
        (0..1u32 << m).all(|v| {
            (0..m).all(|b| {
                let w = v | (1 << b);
                w == v || self.table[v as usize] & !self.table[w as usize] == 0
            })
        })
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.table.iter().map(|&c| Vertex { dim: self.n, code: c }).collect()
    }

    /// Table as bit strings, the serialized form.
    pub fn table_strings(&self) -> Vec<String> {
        self.vertices().iter().map(Vertex::to_string).collect()
    }

    pub fn from_strings(m: usize, n: usize, rows: &[String]) -> Result<CubeMap> {
        let mut table = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != n || !r.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(Error::InvalidTable(format!("row `{r}` is not a {n}-bit string")));
            }
            table.push(r.bytes().fold(0u32, |acc, b| (acc << 1) | (b - b'0') as u32));
        }
        CubeMap::new(m, n, table)
    }
}

impl fmt::Debug for CubeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CubeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} [{}]", self.m, self.n, self.table_strings().join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct CubeMapRepr {
    m: usize,
    n: usize,
    table: Vec<String>,
}

impl Serialize for CubeMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CubeMapRepr { m: self.dom(), n: self.cod(), table: self.table_strings() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CubeMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<CubeMap, D::Error> {
        let r = CubeMapRepr::deserialize(d)?;
        CubeMap::from_strings(r.m, r.n, &r.table).map_err(serde::de::Error::custom)
    }
}

/// `g ∘ f`.
pub fn compose(g: &CubeMap, f: &CubeMap) -> Result<CubeMap> {
    g.after(f)
}

pub fn tensor(f: &CubeMap, g: &CubeMap) -> CubeMap {
    f.tensor(g)
}

/// The generating classes of maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    /// `∂^n_{i,ε}: {0,1}^{n-1} → {0,1}^n`, inserting `ε` at position `i`.
    Face,
    /// `δ^n_i: {0,1}^{n-1} → {0,1}^n`, repeating coordinate `i`.
    Diagonal,
    /// `σ^n_i: {0,1}^{n+1} → {0,1}^n`, deleting coordinate `i`.
    Projection,
    /// `γ^n_{i,ε}: {0,1}^{n+1} → {0,1}^n`, merging coordinates `i, i+1` by `∧` (ε = 1) or `∨` (ε = 0).
    Connection,
    /// `λ^n_i: {0,1}^n → {0,1}^n`, swapping coordinates `i, i+1`.
    Transposition,
    /// `ρ^n_i: {0,1}^n → {0,1}^n`, reversing coordinate `i`.
    Reversal,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Face => "face",
            GeneratorKind::Diagonal => "diagonal",
            GeneratorKind::Projection => "projection",
            GeneratorKind::Connection => "connection",
            GeneratorKind::Transposition => "transposition",
            GeneratorKind::Reversal => "reversal",
        }
    }

    pub fn needs_side(self) -> bool {
        matches!(self, GeneratorKind::Face | GeneratorKind::Connection)
    }

    /// The symbol a theory must have to admit this generator with the given side.
    pub fn symbol(self, eps: u8) -> Option<Symbol> {
        match self {
            GeneratorKind::Face | GeneratorKind::Projection => None,
            GeneratorKind::Diagonal => Some(Symbol::Delta),
            GeneratorKind::Connection if eps == 1 => Some(Symbol::Meet),
            GeneratorKind::Connection => Some(Symbol::Join),
            GeneratorKind::Transposition => Some(Symbol::Sigma),
            GeneratorKind::Reversal => Some(Symbol::Rho),
        }
    }

    /// Valid index range `1..=max` for a generator with parameter `n`.
    fn max_index(self, n: usize) -> usize {
        match self {
            GeneratorKind::Face | GeneratorKind::Reversal | GeneratorKind::Connection => n,
            GeneratorKind::Diagonal | GeneratorKind::Transposition => n.saturating_sub(1),
            GeneratorKind::Projection => n + 1,
        }
    }
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeneratorKind> {
        Ok(match s {
            "face" => GeneratorKind::Face,
            "diagonal" => GeneratorKind::Diagonal,
            "projection" => GeneratorKind::Projection,
            "connection" => GeneratorKind::Connection,
            "transposition" | "symmetry" => GeneratorKind::Transposition,
            "reversal" => GeneratorKind::Reversal,
            _ => return Err(Error::Parse(format!("unknown generator kind `{s}`"))),
        })
    }
}

/// The generator of `kind` with parameters `n`, `i`, `ε`, checked against `theory`.
pub fn generator(theory: Theory, kind: GeneratorKind, n: usize, i: usize, eps: Option<u8>) -> Result<CubeMap> {
    let eps = match (kind.needs_side(), eps) {
        (true, Some(e)) if e <= 1 => e,
        (true, Some(e)) => return Err(Error::InvalidSide(e)),
        (true, None) => return Err(Error::Parse(format!("{} requires a side", kind.name()))),
        (false, _) => 0,
    };
    if let Some(sym) = kind.symbol(eps) {
        if !theory.contains(sym) {
            return Err(Error::NotAdmitted { kind: kind.name(), theory });
        }
    }
    let max = kind.max_index(n);
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { what: kind.name(), index: i, max });
    }
    if n + 1 > MAX_DIM {
        return Err(Error::BoundsExceeded(format!("generator dimension {n}")));
    }
    Ok(match kind {
        GeneratorKind::Face => face(n, i, eps),
        GeneratorKind::Diagonal => diagonal(n, i),
        GeneratorKind::Projection => projection(n, i),
        GeneratorKind::Connection => connection(n, i, eps),
        GeneratorKind::Transposition => transposition(n, i),
        GeneratorKind::Reversal => reversal(n, i),
    })
}

/// `∂^n_{i,ε}`. Panics unless `1 ≤ i ≤ n`.
pub fn face(n: usize, i: usize, eps: u8) -> CubeMap {
    assert!(i >= 1 && i <= n && eps <= 1, "face index out of range");
    CubeMap::from_coords(n - 1, n, |a| {
        let mut out = a.to_vec();
        out.insert(i - 1, eps);
        out
    })
}

/// `δ^n_i`. Panics unless `1 ≤ i ≤ n - 1`.
pub fn diagonal(n: usize, i: usize) -> CubeMap {
    assert!(i >= 1 && i < n, "diagonal index out of range");
    CubeMap::from_coords(n - 1, n, |a| {
        let mut out = a.to_vec();
        out.insert(i, a[i - 1]);
        out
    })
}

/// `σ^n_i`. Panics unless `1 ≤ i ≤ n + 1`.
pub fn projection(n: usize, i: usize) -> CubeMap {
    assert!(i >= 1 && i <= n + 1, "projection index out of range");
    CubeMap::from_coords(n + 1, n, |a| {
        let mut out = a.to_vec();
        out.remove(i - 1);
        out
    })
}

/// `γ^n_{i,ε}`. Panics unless `1 ≤ i ≤ n`.
pub fn connection(n: usize, i: usize, eps: u8) -> CubeMap {
    assert!(i >= 1 && i <= n && eps <= 1, "connection index out of range");
    CubeMap::from_coords(n + 1, n, |a| {
        let mut out = a.to_vec();
        let merged = if eps == 1 { a[i - 1] & a[i] } else { a[i - 1] | a[i] };
        out[i - 1] = merged;
        out.remove(i);
        out
    })
}

/// `λ^n_i`. Panics unless `1 ≤ i ≤ n - 1`.
pub fn transposition(n: usize, i: usize) -> CubeMap {
    assert!(i >= 1 && i < n, "transposition index out of range");
    CubeMap::from_coords(n, n, |a| {
        let mut out = a.to_vec();
        out.swap(i - 1, i);
        out
    })
}

/// `ρ^n_i`. Panics unless `1 ≤ i ≤ n`.
pub fn reversal(n: usize, i: usize) -> CubeMap {
    assert!(i >= 1 && i <= n, "reversal index out of range");
    CubeMap::from_coords(n, n, |a| {
        let mut out = a.to_vec();
        out[i - 1] ^= 1;
        out
    })
}

/// All generators admitted by `theory` with domain `{0,1}^b`.
pub fn generators_from(theory: Theory, b: usize) -> Vec<CubeMap> {
    let mut out = Vec::new();
    for i in 1..=b + 1 {
        for eps in 0..=1 {
            out.push(face(b + 1, i, eps));
        }
    }
    if b >= 1 {
        for i in 1..=b {
            out.push(projection(b - 1, i));
        }
        if theory.contains(Symbol::Delta) {
            for i in 1..=b {
                out.push(diagonal(b + 1, i));
            }
        }
        if theory.contains(Symbol::Rho) {
            for i in 1..=b {
                out.push(reversal(b, i));
            }
        }
    }
    if b >= 2 {
        for i in 1..b {
            if theory.contains(Symbol::Meet) {
                out.push(connection(b - 1, i, 1));
            }
            if theory.contains(Symbol::Join) {
                out.push(connection(b - 1, i, 0));
            }
            if theory.contains(Symbol::Sigma) {
                out.push(transposition(b, i));
            }
        }
    }
    out
}

/// Elementary degeneracies `{0,1}^d → {0,1}^{d-1}` admitted by `theory`,
/// each paired with a face section `s` satisfying `μ s = id`.
pub fn elementary_degeneracies(theory: Theory, d: usize) -> Vec<(CubeMap, CubeMap)> {
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    for i in 1..=d {
        out.push((projection(d - 1, i), face(d, i, 0)));
    }
    for i in 1..d {
        if theory.contains(Symbol::Meet) {
            out.push((connection(d - 1, i, 1), face(d, i, 1)));
        }
        if theory.contains(Symbol::Join) {
            out.push((connection(d - 1, i, 0), face(d, i, 0)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        let f = generator(Theory::EMPTY, GeneratorKind::Face, 1, 1, Some(0)).unwrap();
        assert_eq!((f.dom(), f.cod(), f.table()), (0, 1, &[0u32][..]));
        let g = generator(Theory::MEET, GeneratorKind::Connection, 1, 1, Some(1)).unwrap();
        assert_eq!(g.table(), &[0, 0, 0, 1]);
        let r = generator(Theory::new([Symbol::Rho]), GeneratorKind::Reversal, 1, 1, None).unwrap();
        assert_eq!(r.table(), &[1, 0]);
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(
            generator(Theory::EMPTY, GeneratorKind::Connection, 1, 1, Some(1)),
            Err(Error::NotAdmitted { .. })
        ));
        assert!(matches!(
            generator(Theory::EMPTY, GeneratorKind::Face, 2, 3, Some(0)),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            generator(Theory::FULL, GeneratorKind::Transposition, 1, 1, None),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn tensor_of_face_with_identity() {
        let t = face(1, 1, 0).tensor(&CubeMap::identity(1));
        assert_eq!(t, face(2, 1, 0));
        assert_eq!(CubeMap::identity(2).tensor(&CubeMap::identity(1)), CubeMap::identity(3));
    }

    #[test]
    fn serde_round_trip() {
        let f = connection(1, 1, 0);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"m":2,"n":1,"table":["0","1","1","1"]}"#);
        let back: CubeMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<CubeMap>(r#"{"m":1,"n":1,"table":["0"]}"#).is_err());
        assert!(serde_json::from_str::<CubeMap>(r#"{"m":1,"n":1,"table":["0","2"]}"#).is_err());
    }

    #[test]
    fn section_of_each_degeneracy() {
        for d in 1..=4 {
            for (mu, s) in elementary_degeneracies(Theory::MEET_JOIN, d) {
                assert!(mu.after(&s).unwrap().is_identity());
            }
        }
    }
}
