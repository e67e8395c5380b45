use std::fmt;

use serde::Serialize;

use super::hom::is_member;
use super::map::{coord, CubeMap};
use super::theory::Theory;
use crate::error::{Error, Result};

/// A composite of faces `∂_{i_1,ε_1} … ∂_{i_p,ε_p}` into `◻^n` with
/// `i_1 > … > i_p`. Each index is the position of its constant coordinate
/// in the final codomain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FaceList {
    entries: Vec<(usize, u8)>,
    target: usize,
}

impl FaceList {
    pub fn new(target: usize, entries: Vec<(usize, u8)>) -> Result<FaceList> {
        for w in entries.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::InvalidTable(format!(
                    "face indices must strictly decrease, got {} then {}",
                    w[0].0, w[1].0
                )));
            }
        }
        for &(i, e) in &entries {
            if i == 0 || i > target {
                return Err(Error::IndexOutOfRange { what: "face list", index: i, max: target });
            }
            if e > 1 {
                return Err(Error::InvalidSide(e));
            }
        }
        Ok(FaceList { entries, target })
    }

    pub fn empty(target: usize) -> FaceList {
        FaceList { entries: Vec::new(), target }
    }

    pub fn entries(&self) -> &[(usize, u8)] {
        &self.entries
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn source(&self) -> usize {
        self.target - self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The composite face map `◻^{source} → ◻^{target}`.
    pub fn to_map(&self) -> CubeMap {
        let n = self.target;
        let mut fixed = vec![None; n + 1];
        for &(i, e) in &self.entries {
            fixed[i] = Some(e);
        }
        let src = self.source();
        CubeMap::from_fn(src, n, |v| {
            let mut out = 0u32;
            let mut k = 1;
            for slot in fixed.iter().skip(1) {
                let b = match slot {
                    Some(e) => *e as u32,
                    None => {
                        let b = coord(v, src, k) as u32;
                        k += 1;
                        b
                    }
                };
                out = (out << 1) | b;
            }
            out
        })
    }

    /// Every face composite `◻^p → ◻^n`, in canonical order.
    pub fn all(n: usize, p: usize) -> Vec<FaceList> {
        let mut out = Vec::new();
        if p > n {
            return out;
        }
        for subset in 0u32..1 << n {
            if subset.count_ones() as usize != n - p {
                continue;
            }
            let idx: Vec<usize> = (1..=n).rev().filter(|i| subset >> (i - 1) & 1 == 1).collect();
            for sides in 0u32..1 << idx.len() {
                let entries = idx
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| (i, ((sides >> k) & 1) as u8))
                    .collect();
                out.push(FaceList { entries, target: n });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for FaceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(i, e)| format!("∂({i},{e})")).collect();
        if parts.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

impl Serialize for FaceList {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// The pairs `(i, ε)` such that `f(a)_i = ε` for every `a`, in increasing `i`.
pub fn fixed_coordinates(f: &CubeMap) -> Vec<(usize, u8)> {
    let n = f.cod();
    let all = f.table().iter().fold(u32::MAX, |acc, &v| acc & v);
    let any = f.table().iter().fold(0u32, |acc, &v| acc | v);
    (1..=n)
        .filter_map(|i| {
            let bit = 1u32 << (n - i);
            if all & bit != 0 {
                Some((i, 1))
            } else if any & bit == 0 {
                Some((i, 0))
            } else {
                None
            }
        })
        .collect()
}

pub fn is_active(f: &CubeMap) -> bool {
    fixed_coordinates(f).is_empty()
}

/// Delete the given coordinates (1-based, any order) from every output.
fn delete_coordinates(f: &CubeMap, drop: &[usize]) -> CubeMap {
    let n = f.cod();
    let keep: Vec<usize> = (1..=n).filter(|i| !drop.contains(i)).collect();
    CubeMap::from_fn(f.dom(), keep.len(), |v| {
        let w = f.apply(v);
        keep.iter().fold(0u32, |acc, &i| (acc << 1) | coord(w, n, i) as u32)
    })
}

/// The unique factorization `f = κ ψ` with `κ` a face composite and `ψ` active.
pub fn active_face_factor(f: &CubeMap) -> (FaceList, CubeMap) {
    let mut fixed = fixed_coordinates(f);
    let drop: Vec<usize> = fixed.iter().map(|&(i, _)| i).collect();
    let psi = delete_coordinates(f, &drop);
    fixed.reverse();
    (FaceList { entries: fixed, target: f.cod() }, psi)
}

/// Eilenberg–Zilber factorization `f = κ μ` in a theory inside `{∧, ∨}`:
/// `κ` a face composite and `μ` the identity or a degeneracy.
pub fn ez_factor(theory: Theory, f: &CubeMap) -> Result<(FaceList, CubeMap)> {
    if !theory.is_ez() {
        return Err(Error::NotEzTheory(theory));
    }
    if !is_member(theory, f)? {
        return Err(Error::NotMember(theory));
    }
    let (kappa, mu) = active_face_factor(f);
    if !is_member(theory, &mu)? || mu.cod() > mu.dom() {
        return Err(Error::Inconsistent(format!("active part {mu} is not a degeneracy")));
    }
    Ok((kappa, mu))
}

/// Active, not the identity, and a member of a theory inside `{∧, ∨}`.
pub fn is_degeneracy(theory: Theory, f: &CubeMap) -> Result<bool> {
    if !theory.is_ez() {
        return Err(Error::NotEzTheory(theory));
    }
    if !is_member(theory, f)? {
        return Err(Error::NotMember(theory));
    }
    Ok(is_active(f) && !f.is_identity())
}

#[cfg(test)]
mod tests {
    use super::super::map::{connection, face, projection};
    use super::*;

    #[test]
    fn fixed_coordinate_examples() {
        assert_eq!(fixed_coordinates(&face(3, 2, 1)), vec![(2, 1)]);
        assert!(fixed_coordinates(&projection(2, 1)).is_empty());
        let f = CubeMap::from_coords(2, 2, |a| vec![a[1], 1]);
        assert_eq!(fixed_coordinates(&f), vec![(2, 1)]);
    }

    #[test]
    fn factor_examples() {
        let f = CubeMap::from_coords(2, 2, |a| vec![a[1], 1]);
        let (k, psi) = active_face_factor(&f);
        assert_eq!(k.entries(), &[(2, 1)]);
        assert_eq!(psi, projection(1, 1));
        let g = face(2, 2, 1).after(&face(1, 1, 0)).unwrap();
        let (k, psi) = active_face_factor(&g);
        assert_eq!(k.entries(), &[(2, 1), (1, 0)]);
        assert!(psi.is_identity());
        assert_eq!(k.to_map(), g);
    }

    #[test]
    fn ez_examples() {
        let c0 = CubeMap::from_fn(1, 1, |_| 0);
        let (k, mu) = ez_factor(Theory::EMPTY, &c0).unwrap();
        assert_eq!(k.entries(), &[(1, 0)]);
        assert_eq!(mu, projection(0, 1));
        let g = connection(1, 1, 1);
        let (k, mu) = ez_factor(Theory::MEET, &g).unwrap();
        assert!(k.is_empty());
        assert_eq!(mu, g);
        assert!(ez_factor(Theory::POSET, &g).is_err());
        assert!(is_degeneracy(Theory::MEET, &g).unwrap());
        assert!(!is_degeneracy(Theory::MEET, &face(2, 1, 0)).unwrap());
        assert!(!is_degeneracy(Theory::MEET, &CubeMap::identity(2)).unwrap());
    }

    #[test]
    fn face_lists_enumerate() {
        assert_eq!(FaceList::all(2, 1).len(), 4);
        assert_eq!(FaceList::all(3, 1).len(), 12);
        for k in FaceList::all(3, 1) {
            let (k2, psi) = active_face_factor(&k.to_map());
            assert_eq!(k2, k);
            assert!(psi.is_identity());
        }
    }
}
