//! Standard decomposition cubes `N_k(φ)`, long diagonals and deletions, and
//! the base-dimension and tail-length statistics of a map.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cube_theory::{active_face_factor, connection, face, CubeMap, Symbol};
use crate::error::{Error, Result};

/// Which connection builds the decomposition cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// `γ_{n,1}`, merging with `∧`; the missing face has side 1.
    Meet,
    /// `γ_{n,0}`, merging with `∨`; the missing face has side 0.
    Join,
}

impl Flavor {
    /// Side `ε` of the connection `γ_{n,ε}` and of the filled face.
    pub fn side(self) -> u8 {
        match self {
            Flavor::Meet => 1,
            Flavor::Join => 0,
        }
    }

    pub fn symbol(self) -> Symbol {
        match self {
            Flavor::Meet => Symbol::Meet,
            Flavor::Join => Symbol::Join,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Meet => "meet",
            Flavor::Join => "join",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flavor> {
        match s {
            "meet" | "and" | "∧" => Ok(Flavor::Meet),
            "join" | "or" | "∨" => Ok(Flavor::Join),
            _ => Err(Error::Parse(format!("unknown flavor `{s}`"))),
        }
    }
}

/// `D_n: ◻^n → ◻^{2n}`, `a ↦ (a, a)`.
pub fn long_diagonal(n: usize) -> CubeMap {
    CubeMap::from_fn(n, 2 * n, |v| (v << n) | v)
}

/// `σ^F_m: ◻^{m+n} → ◻^n`, deleting the first `m` coordinates.
pub fn front_deletion(m: usize, n: usize) -> CubeMap {
    let mask = (1u32 << n) - 1;
    CubeMap::from_fn(m + n, n, |v| v & mask)
}

/// `σ^L_n: ◻^{m+n} → ◻^m`, deleting the last `n` coordinates.
pub fn last_deletion(m: usize, n: usize) -> CubeMap {
    CubeMap::from_fn(m + n, m, |v| v >> n)
}

fn need_codomain(phi: &CubeMap) -> Result<()> {
    if phi.cod() == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    Ok(())
}

/// `N_k(φ)` by the closed form `(a, b, c) ↦ (φ(a)_1, …, φ(a)_{n-1}, φ(a)_n ∧ b, c)`,
/// with `∨` in place of `∧` for the join flavor.
pub fn standard_decomposition(phi: &CubeMap, k: usize, flavor: Flavor) -> Result<CubeMap> {
    need_codomain(phi)?;
    let (m, n) = (phi.dom(), phi.cod());
    let kmask = (1u32 << k) - 1;
    Ok(CubeMap::from_fn(m + 1 + k, n + k, |v| {
        let c = v & kmask;
        let b = (v >> k) & 1;
        let a = v >> (k + 1);
        let w = phi.apply(a);
        let last = w & 1;
        let merged = match flavor {
            Flavor::Meet => last & b,
            Flavor::Join => last | b,
        };
        ((((w >> 1) << 1) | merged) << k) | c
    }))
}

/// `N_k(φ)` by its defining composite `γ_{n,ε} (φ ⊗ ◻^1 ⊗ ◻^k)`.
pub fn standard_decomposition_composite(phi: &CubeMap, k: usize, flavor: Flavor) -> Result<CubeMap> {
    need_codomain(phi)?;
    let n = phi.cod();
    let inner = phi.tensor(&CubeMap::identity(1)).tensor(&CubeMap::identity(k));
    connection(n + k, n, flavor.side()).after(&inner)
}

/// `ψ'` with `ψ = ψ' ⊗ ◻^k`, if it exists.
pub fn split_tail(psi: &CubeMap, k: usize) -> Option<CubeMap> {
    let (m, p) = (psi.dom(), psi.cod());
    if k > m || k > p {
        return None;
    }
    let kmask = (1u32 << k) - 1;
    let ok = (0..1u32 << m).all(|v| {
        let w = psi.apply(v);
        w & kmask == v & kmask && w >> k == psi.apply(v & !kmask) >> k
    });
    ok.then(|| CubeMap::from_fn(m - k, p - k, |u| psi.apply(u << k) >> k))
}

/// Largest `k` with `ψ = ψ' ⊗ ◻^k`.
pub fn tail_length(psi: &CubeMap) -> usize {
    (0..=psi.dom().min(psi.cod())).rev().find(|&k| split_tail(psi, k).is_some()).unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompositionStats {
    pub base_dimension: usize,
    pub tail_length: usize,
}

/// Base dimension and tail length of `f = κ ψ`, read off the active part `ψ`.
pub fn stats(f: &CubeMap) -> DecompositionStats {
    let (_, psi) = active_face_factor(f);
    DecompositionStats { base_dimension: psi.cod(), tail_length: tail_length(&psi) }
}

/// The edge `◻^1 → ◻^n` whose coordinate `i` varies and whose other
/// coordinates equal `1 - ε`.
pub fn critical_edge(n: usize, i: usize, eps: u8) -> Result<CubeMap> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { what: "critical edge", index: i, max: n });
    }
    if eps > 1 {
        return Err(Error::InvalidSide(eps));
    }
    let rest = 1 - eps;
    Ok(CubeMap::from_coords(1, n, |a| (1..=n).map(|j| if j == i { a[0] } else { rest }).collect()))
}

/// Face `(i, ε)` of a cube, `f ∂_{i,ε}`.
pub fn face_of(f: &CubeMap, i: usize, eps: u8) -> CubeMap {
    f.after(&face(f.dom(), i, eps)).expect("face dimensions agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_theory::{diagonal, projection, reversal, transposition};

    #[test]
    fn examples() {
        assert!(long_diagonal(0).is_identity());
        assert_eq!(long_diagonal(1).table(), &[0, 3]);
        assert_eq!(front_deletion(1, 1), projection(1, 1));
        assert!(front_deletion(0, 2).is_identity());
        assert!(last_deletion(2, 0).is_identity());

        let n = standard_decomposition(&CubeMap::identity(1), 0, Flavor::Meet).unwrap();
        assert_eq!(n, connection(1, 1, 1));
        let n = standard_decomposition(&diagonal(2, 1), 0, Flavor::Meet).unwrap();
        assert_eq!(n, CubeMap::from_coords(2, 2, |a| vec![a[0], a[0] & a[1]]));
        let n = standard_decomposition(&reversal(1, 1), 0, Flavor::Meet).unwrap();
        assert_eq!(n, CubeMap::from_coords(2, 1, |a| vec![(1 - a[0]) & a[1]]));
        let n = standard_decomposition(&transposition(2, 1), 0, Flavor::Meet).unwrap();
        assert_eq!(n, CubeMap::from_coords(3, 2, |a| vec![a[1], a[0] & a[2]]));
        assert!(standard_decomposition(&CubeMap::identity(0), 0, Flavor::Meet).is_err());
    }

    #[test]
    fn stats_examples() {
        let f = face(2, 2, 1).after(&projection(1, 1)).unwrap();
        assert_eq!(stats(&f).base_dimension, 1);
        for n in 0..=4 {
            assert_eq!(stats(&CubeMap::identity(n)).tail_length, n);
        }
    }

    #[test]
    fn critical_edges() {
        assert!(critical_edge(1, 1, 0).unwrap().is_identity());
        assert!(critical_edge(1, 1, 1).unwrap().is_identity());
        assert_eq!(critical_edge(2, 1, 1).unwrap().table(), &[0b00, 0b10]);
        assert!(critical_edge(2, 3, 1).is_err());
    }

    #[test]
    fn closed_form_matches_composite() {
        for m in 0..=2 {
            for n in 1..=2 {
                let phi = CubeMap::from_fn(m, n, |v| (v * 7 + 3) % (1 << n));
                for k in 0..=2 {
                    for fl in [Flavor::Meet, Flavor::Join] {
                        assert_eq!(
                            standard_decomposition(&phi, k, fl).unwrap(),
                            standard_decomposition_composite(&phi, k, fl).unwrap()
                        );
                    }
                }
            }
        }
    }
}
