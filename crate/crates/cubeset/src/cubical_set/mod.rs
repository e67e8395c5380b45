//! Dimension-truncated cubical sets, their maps and subcomplexes.
//!
//! A [`CubicalSet`] stores, for every dimension `d ≤ D`, a list of cubes
//! and the complete action of every map `◻^e → ◻^d` of its theory with
//! `e ≤ D`. Cubes are addressed by `(dimension, index)`.

mod gluing;
mod product;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cube_theory::{
    elementary_degeneracies, enumerate_hom, fixed_coordinates, CubeMap, HomSet, Theory,
};
use crate::error::{Error, Result};

pub use gluing::{boundary_by_gluing, GluedBoundary};
pub use product::{cartesian_product, geometric_product, geometric_product_bounded, CartesianProduct, GeometricProduct};

/// Truncation used when none is given.
pub const DEFAULT_TRUNCATION: usize = 3;

/// Address of a cube: dimension and index within that dimension.
pub type CubeRef = (usize, usize);

/// A canonical description of a cube, used for display and serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum CubeLabel {
    /// A map into a representable.
    Map { map: CubeMap },
    /// A pair of cubes of equal dimension.
    Pair { left: usize, right: usize },
    /// A representative cell `(x ⊗ y) φ` of a geometric product.
    Cell { x: CubeRef, y: CubeRef, phi: CubeMap },
    /// A normal pair `x φ` with `x` non-degenerate and `φ` active.
    Normal { seed: CubeRef, act: CubeMap },
    /// A cube `y` on the face `(i, ε)` of a glued boundary.
    Glued { face: (usize, u8), map: CubeMap },
}

impl fmt::Display for CubeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubeLabel::Map { map } => write!(f, "{map}"),
            CubeLabel::Pair { left, right } => write!(f, "({left}, {right})"),
            CubeLabel::Cell { x, y, phi } => write!(f, "({}:{} ⊗ {}:{}) {phi}", x.0, x.1, y.0, y.1),
            CubeLabel::Normal { seed, act } => write!(f, "{}:{} · {act}", seed.0, seed.1),
            CubeLabel::Glued { face, map } => write!(f, "∂({},{}) {map}", face.0, face.1),
        }
    }
}

/// A presheaf on `◻_A` truncated at dimension `D`.
pub struct CubicalSet {
    theory: Theory,
    truncation: usize,
    labels: Vec<Vec<CubeLabel>>,
    /// `homs[e][d]` is `◻_A(◻^e, ◻^d)`.
    homs: Vec<Vec<Arc<HomSet>>>,
    /// `action[d][e][x * |homs[e][d]| + f]` is the index of `x · f`.
    action: Vec<Vec<Vec<u32>>>,
}

impl fmt::Debug for CubicalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicalSet({}, D={}, counts={:?})", self.theory, self.truncation, self.counts())
    }
}

pub(crate) fn hom_table(theory: Theory, truncation: usize) -> Result<Vec<Vec<Arc<HomSet>>>> {
    (0..=truncation)
        .map(|e| (0..=truncation).map(|d| enumerate_hom(theory, e, d)).collect())
        .collect()
}

impl CubicalSet {
    /// Build a cubical set from labels and an action function
    /// `act(d, x, e, f)` returning the index of `x · f` in dimension `e`.
    pub fn build(
        theory: Theory,
        truncation: usize,
        labels: Vec<Vec<CubeLabel>>,
        mut act: impl FnMut(usize, usize, usize, &CubeMap) -> Result<usize>,
    ) -> Result<CubicalSet> {
        if labels.len() != truncation + 1 {
            return Err(Error::DimensionMismatch { expected: truncation + 1, found: labels.len() });
        }
        let homs = hom_table(theory, truncation)?;
        let mut action = Vec::with_capacity(truncation + 1);
        for d in 0..=truncation {
            let mut per_e = Vec::with_capacity(truncation + 1);
            for e in 0..=truncation {
                let hom = &homs[e][d];
                let mut tab = Vec::with_capacity(labels[d].len() * hom.len());
                for x in 0..labels[d].len() {
                    for f in hom.maps() {
                        let y = act(d, x, e, f)?;
                        if y >= labels[e].len() {
                            return Err(Error::UnknownCube { dim: e, index: y });
                        }
                        tab.push(y as u32);
                    }
                }
                per_e.push(tab);
            }
            action.push(per_e);
        }
        Ok(CubicalSet { theory, truncation, labels, homs, action })
    }

    /// The presheaf with no cubes.
    pub fn empty(theory: Theory, truncation: usize) -> Result<CubicalSet> {
        CubicalSet::build(theory, truncation, vec![Vec::new(); truncation + 1], |_, _, _, _| unreachable!())
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn count(&self, d: usize) -> usize {
        self.labels.get(d).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, d: usize, x: usize) -> &CubeLabel {
        &self.labels[d][x]
    }

    pub fn labels(&self, d: usize) -> &[CubeLabel] {
        &self.labels[d]
    }

    pub fn find(&self, d: usize, label: &CubeLabel) -> Option<usize> {
        self.labels.get(d)?.iter().position(|l| l == label)
    }

    /// `◻_A(◻^e, ◻^d)`.
    pub fn hom(&self, e: usize, d: usize) -> &HomSet {
        &self.homs[e][d]
    }

    fn check_cube(&self, d: usize, x: usize) -> Result<()> {
        if d > self.truncation || x >= self.count(d) {
            return Err(Error::UnknownCube { dim: d, index: x });
        }
        Ok(())
    }

    /// `x · f` where `f` is the `fi`-th map `◻^e → ◻^d`.
    #[inline]
    pub fn act_index(&self, d: usize, x: usize, e: usize, fi: usize) -> usize {
        let n = self.homs[e][d].len();
        self.action[d][e][x * n + fi] as usize
    }

    /// `x · f`.
    pub fn act(&self, d: usize, x: usize, f: &CubeMap) -> Result<usize> {
        self.check_cube(d, x)?;
        if f.cod() != d {
            return Err(Error::DimensionMismatch { expected: d, found: f.cod() });
        }
        let e = f.dom();
        if e > self.truncation {
            return Err(Error::BoundsExceeded(format!("dimension {e} above truncation {}", self.truncation)));
        }
        let fi = self.homs[e][d].index_of(f).ok_or(Error::NotMember(self.theory))?;
        Ok(self.act_index(d, x, e, fi))
    }

    /// Whether `x = y μ` for an elementary degeneracy `μ` (a projection or
    /// a connection of the theory).
    pub fn is_degenerate(&self, d: usize, x: usize) -> Result<bool> {
        Ok(self.strip(d, x)?.is_some())
    }

    fn strip(&self, d: usize, x: usize) -> Result<Option<(usize, CubeMap)>> {
        self.check_cube(d, x)?;
        for (mu, s) in elementary_degeneracies(self.theory, d) {
            let y = self.act(d, x, &s)?;
            if self.act(d - 1, y, &mu)? == x {
                return Ok(Some((y, mu)));
            }
        }
        Ok(None)
    }

    /// The factorization `x = y μ` with `y` non-degenerate and `μ` the
    /// identity or a degeneracy, found by stripping elementary degeneracies.
    pub fn ez_cube_factor(&self, d: usize, x: usize) -> Result<(CubeRef, CubeMap)> {
        if !self.theory.is_ez() {
            return Err(Error::NotEzTheory(self.theory));
        }
        let mut cur = (d, x);
        let mut total = CubeMap::identity(d);
        while let Some((y, mu)) = self.strip(cur.0, cur.1)? {
            total = mu.after(&total)?;
            cur = (cur.0 - 1, y);
        }
        Ok((cur, total))
    }

    pub fn nondegenerate(&self, d: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for x in 0..self.count(d) {
            if !self.is_degenerate(d, x)? {
                out.push(x);
            }
        }
        Ok(out)
    }

    pub fn nondegenerate_counts(&self) -> Result<Vec<usize>> {
        (0..=self.truncation).map(|d| Ok(self.nondegenerate(d)?.len())).collect()
    }

    /// Exhaustive check of `x · id = x` and `(x · f) · g = x · (f g)` for all
    /// cubes up to dimension `max_dim`; returns the first violation.
    pub fn check_functoriality(&self, max_dim: usize) -> std::result::Result<(), String> {
        let top = max_dim.min(self.truncation);
        for d in 0..=top {
            let id = CubeMap::identity(d);
            let idi = self.homs[d][d].index_of(&id).expect("identity is a member");
            for x in 0..self.count(d) {
                if self.act_index(d, x, d, idi) != x {
                    return Err(format!("identity moves cube {d}:{x}"));
                }
                for e in 0..=top {
                    for (fi, f) in self.homs[e][d].maps().iter().enumerate() {
                        let y = self.act_index(d, x, e, fi);
                        for c in 0..=top {
                            for (gi, g) in self.homs[c][e].maps().iter().enumerate() {
                                let lhs = self.act_index(e, y, c, gi);
                                let fg = f.after(g).expect("composable");
                                let fgi = self.homs[c][d].index_of(&fg).expect("closed under composition");
                                if lhs != self.act_index(d, x, c, fgi) {
                                    return Err(format!("action of {f} then {g} on {d}:{x}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A map of cubical sets, given by one function per dimension.
#[derive(Clone)]
pub struct CSMap {
    pub source: Arc<CubicalSet>,
    pub target: Arc<CubicalSet>,
    pub components: Vec<Vec<usize>>,
}

impl fmt::Debug for CSMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CSMap({:?} → {:?})", self.source, self.target)
    }
}

impl CSMap {
    pub fn new(source: Arc<CubicalSet>, target: Arc<CubicalSet>, components: Vec<Vec<usize>>) -> Result<CSMap> {
        if source.theory() != target.theory() {
            return Err(Error::TheoryMismatch(source.theory(), target.theory()));
        }
        if source.truncation() != target.truncation() {
            return Err(Error::TruncationMismatch(source.truncation(), target.truncation()));
        }
        for (d, comp) in components.iter().enumerate() {
            if comp.len() != source.count(d) {
                return Err(Error::DimensionMismatch { expected: source.count(d), found: comp.len() });
            }
            if let Some(&y) = comp.iter().find(|&&y| y >= target.count(d)) {
                return Err(Error::UnknownCube { dim: d, index: y });
            }
        }
        if components.len() != source.truncation() + 1 {
            return Err(Error::DimensionMismatch { expected: source.truncation() + 1, found: components.len() });
        }
        Ok(CSMap { source, target, components })
    }

    pub fn identity(x: &Arc<CubicalSet>) -> CSMap {
        let components = (0..=x.truncation()).map(|d| (0..x.count(d)).collect()).collect();
        CSMap { source: x.clone(), target: x.clone(), components }
    }

    pub fn apply(&self, d: usize, x: usize) -> usize {
        self.components[d][x]
    }

    /// Exhaustive naturality check up to dimension `max_dim`.
    pub fn check_naturality(&self, max_dim: usize) -> std::result::Result<(), String> {
        let top = max_dim.min(self.source.truncation());
        for d in 0..=top {
            for x in 0..self.source.count(d) {
                let fx = self.components[d][x];
                for e in 0..=top {
                    for fi in 0..self.source.hom(e, d).len() {
                        let lhs = self.components[e][self.source.act_index(d, x, e, fi)];
                        let rhs = self.target.act_index(d, fx, e, fi);
                        if lhs != rhs {
                            return Err(format!(
                                "naturality fails at {d}:{x} under {}",
                                self.source.hom(e, d).get(fi)
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| {
            let mut v = c.clone();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().enumerate().all(|(d, c)| {
            let mut seen = vec![false; self.target.count(d)];
            c.iter().for_each(|&y| seen[y] = true);
            seen.into_iter().all(|s| s)
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CSMap) -> Result<CSMap> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::Inconsistent("maps are not composable".into()));
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(d, c)| c.iter().map(|&y| other.components[d][y]).collect())
            .collect();
        Ok(CSMap { source: self.source.clone(), target: other.target.clone(), components })
    }

    /// The image, as a subcomplex of the target.
    pub fn image(&self) -> Subcomplex {
        let mut members: Vec<Vec<bool>> = (0..=self.target.truncation()).map(|d| vec![false; self.target.count(d)]).collect();
        for (d, c) in self.components.iter().enumerate() {
            for &y in c {
                members[d][y] = true;
            }
        }
        Subcomplex { ambient: self.target.clone(), members }
    }
}

/// An action-closed set of cubes of an ambient cubical set.
#[derive(Clone)]
pub struct Subcomplex {
    ambient: Arc<CubicalSet>,
    members: Vec<Vec<bool>>,
}

impl fmt::Debug for Subcomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subcomplex(counts={:?})", self.counts())
    }
}

impl PartialEq for Subcomplex {
    fn eq(&self, other: &Subcomplex) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) && self.members == other.members
    }
}

impl Subcomplex {
    /// A subcomplex from a membership predicate; fails unless action-closed.
    pub fn from_predicate(ambient: &Arc<CubicalSet>, pred: impl Fn(usize, usize) -> bool) -> Result<Subcomplex> {
        let members = (0..=ambient.truncation())
            .map(|d| (0..ambient.count(d)).map(|x| pred(d, x)).collect())
            .collect();
        let s = Subcomplex { ambient: ambient.clone(), members };
        s.check_closed()?;
        Ok(s)
    }

    pub fn whole(ambient: &Arc<CubicalSet>) -> Subcomplex {
        let members = (0..=ambient.truncation()).map(|d| vec![true; ambient.count(d)]).collect();
        Subcomplex { ambient: ambient.clone(), members }
    }

    pub fn ambient(&self) -> &Arc<CubicalSet> {
        &self.ambient
    }

    pub fn contains(&self, d: usize, x: usize) -> bool {
        self.members.get(d).and_then(|m| m.get(x)).copied().unwrap_or(false)
    }

    pub fn members(&self, d: usize) -> Vec<usize> {
        (0..self.members[d].len()).filter(|&x| self.members[d][x]).collect()
    }

    pub fn count(&self, d: usize) -> usize {
        self.members[d].iter().filter(|&&b| b).count()
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..self.members.len()).map(|d| self.count(d)).collect()
    }

    pub fn is_subset_of(&self, other: &Subcomplex) -> bool {
        self.members.iter().zip(&other.members).all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| !x || y))
    }

    fn check_closed(&self) -> Result<()> {
        let amb = &self.ambient;
        for d in 0..=amb.truncation() {
            for x in self.members(d) {
                for e in 0..=amb.truncation() {
                    for fi in 0..amb.hom(e, d).len() {
                        let y = amb.act_index(d, x, e, fi);
                        if !self.members[e][y] {
                            return Err(Error::NotSubcomplex(format!(
                                "{} · {} leaves the set",
                                amb.label(d, x),
                                amb.hom(e, d).get(fi)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn nondegenerate_counts(&self) -> Result<Vec<usize>> {
        (0..self.members.len())
            .map(|d| {
                let mut c = 0;
                for x in self.members(d) {
                    if !self.ambient.is_degenerate(d, x)? {
                        c += 1;
                    }
                }
                Ok(c)
            })
            .collect()
    }

    /// The subcomplex as a cubical set in its own right, with its inclusion.
    pub fn to_set(&self) -> Result<(Arc<CubicalSet>, CSMap)> {
        let amb = &self.ambient;
        let old: Vec<Vec<usize>> = (0..self.members.len()).map(|d| self.members(d)).collect();
        let mut new_index: Vec<Vec<usize>> = (0..self.members.len()).map(|d| vec![usize::MAX; amb.count(d)]).collect();
        for (d, xs) in old.iter().enumerate() {
            for (i, &x) in xs.iter().enumerate() {
                new_index[d][x] = i;
            }
        }
        let labels = old.iter().enumerate().map(|(d, xs)| xs.iter().map(|&x| amb.label(d, x).clone()).collect()).collect();
        let set = CubicalSet::build(amb.theory(), amb.truncation(), labels, |d, x, _e, f| {
            let y = amb.act(d, old[d][x], f)?;
            Ok(new_index[f.dom()][y])
        })?;
        let set = Arc::new(set);
        let incl = CSMap::new(set.clone(), amb.clone(), old)?;
        Ok((set, incl))
    }
}

/// The least subcomplex containing `seeds`.
pub fn subcomplex_generated(x: &Arc<CubicalSet>, seeds: &[CubeRef]) -> Result<Subcomplex> {
    let mut members: Vec<Vec<bool>> = (0..=x.truncation()).map(|d| vec![false; x.count(d)]).collect();
    let mut queue = VecDeque::new();
    for &(d, i) in seeds {
        x.check_cube(d, i)?;
        if !members[d][i] {
            members[d][i] = true;
            queue.push_back((d, i));
        }
    }
    while let Some((d, i)) = queue.pop_front() {
        for e in 0..=x.truncation() {
            for fi in 0..x.hom(e, d).len() {
                let y = x.act_index(d, i, e, fi);
                if !members[e][y] {
                    members[e][y] = true;
                    queue.push_back((e, y));
                }
            }
        }
    }
    Ok(Subcomplex { ambient: x.clone(), members })
}

/// The representable `◻^n_A`; its `d`-cubes are the maps `◻^d → ◻^n`.
pub fn representable(theory: Theory, n: usize, truncation: usize) -> Result<Arc<CubicalSet>> {
    let homs: Vec<Arc<HomSet>> = (0..=truncation).map(|d| enumerate_hom(theory, d, n)).collect::<Result<_>>()?;
    let labels = homs.iter().map(|h| h.maps().iter().map(|m| CubeLabel::Map { map: m.clone() }).collect()).collect();
    let set = CubicalSet::build(theory, truncation, labels, |d, x, e, f| {
        let g = homs[d].get(x).after(f)?;
        homs[e].index_of(&g).ok_or(Error::NotMember(theory))
    })?;
    Ok(Arc::new(set))
}

/// The map labelling a cube of a representable (or of a subcomplex of one).
pub fn cube_map(x: &CubicalSet, d: usize, i: usize) -> Option<&CubeMap> {
    match x.label(d, i) {
        CubeLabel::Map { map } => Some(map),
        _ => None,
    }
}

/// The union of all proper faces of `◻^n_A`.
pub fn boundary(theory: Theory, n: usize, truncation: usize) -> Result<Subcomplex> {
    let rep = representable(theory, n, truncation)?;
    let r = rep.clone();
    Subcomplex::from_predicate(&rep, move |d, x| !fixed_coordinates(cube_map(&r, d, x).expect("map label")).is_empty())
}

/// The union of all faces of `◻^n_A` except `∂_{i,ε}`.
pub fn open_box(theory: Theory, n: usize, i: usize, eps: u8, truncation: usize) -> Result<Subcomplex> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { what: "open box", index: i, max: n });
    }
    if eps > 1 {
        return Err(Error::InvalidSide(eps));
    }
    let rep = representable(theory, n, truncation)?;
    let r = rep.clone();
    Subcomplex::from_predicate(&rep, move |d, x| {
        fixed_coordinates(cube_map(&r, d, x).expect("map label")).iter().any(|&fc| fc != (i, eps))
    })
}

/// `i^*`: the same cubes with the action restricted to a subtheory.
pub fn restrict(x: &Arc<CubicalSet>, sub: Theory) -> Result<Arc<CubicalSet>> {
    if !sub.is_subtheory_of(x.theory()) {
        return Err(Error::NotSubtheory { sub, sup: x.theory() });
    }
    if sub == x.theory() {
        return Ok(x.clone());
    }
    let labels = (0..=x.truncation()).map(|d| x.labels(d).to_vec()).collect();
    let set = CubicalSet::build(sub, x.truncation(), labels, |d, i, _e, f| x.act(d, i, f))?;
    Ok(Arc::new(set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_theory::{connection, face};

    #[test]
    fn representable_counts() {
        assert_eq!(representable(Theory::POSET, 1, 2).unwrap().count(2), 6);
        assert_eq!(representable(Theory::EMPTY, 1, 1).unwrap().counts(), vec![2, 3]);
        assert_eq!(representable(Theory::MEET, 0, 3).unwrap().counts(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn representables_are_functorial() {
        for t in [Theory::EMPTY, Theory::MEET, Theory::MEET_JOIN] {
            for n in 0..=2 {
                representable(t, n, 2).unwrap().check_functoriality(2).unwrap();
            }
        }
    }

    #[test]
    fn boundary_and_open_box() {
        let b = boundary(Theory::EMPTY, 2, 2).unwrap();
        assert_eq!(b.nondegenerate_counts().unwrap(), vec![4, 4, 0]);
        let ob = open_box(Theory::EMPTY, 2, 1, 0, 2).unwrap();
        let rep = ob.ambient().clone();
        let idx = |m: CubeMap| rep.find(1, &CubeLabel::Map { map: m }).unwrap();
        assert!(ob.contains(1, idx(face(2, 1, 1))));
        assert!(ob.contains(1, idx(face(2, 2, 0))));
        assert!(ob.contains(1, idx(face(2, 2, 1))));
        assert!(!ob.contains(1, idx(face(2, 1, 0))));
        assert!(boundary(Theory::EMPTY, 0, 2).unwrap().counts().iter().all(|&c| c == 0));
        assert_eq!(boundary(Theory::EMPTY, 1, 2).unwrap().nondegenerate_counts().unwrap(), vec![2, 0, 0]);
    }

    #[test]
    fn generated_from_an_edge() {
        let rep = representable(Theory::MEET, 2, 2).unwrap();
        let e = rep.find(1, &CubeLabel::Map { map: face(2, 1, 0) }).unwrap();
        let s = subcomplex_generated(&rep, &[(1, e)]).unwrap();
        assert_eq!(s.count(0), 2);
        let all: Vec<CubeRef> = (0..=2).flat_map(|d| (0..rep.count(d)).map(move |x| (d, x))).collect();
        assert_eq!(subcomplex_generated(&rep, &all).unwrap(), Subcomplex::whole(&rep));
    }

    #[test]
    fn degeneracy_in_representables() {
        let rep = representable(Theory::MEET, 1, 2).unwrap();
        let g = rep.find(2, &CubeLabel::Map { map: connection(1, 1, 1) }).unwrap();
        assert!(rep.is_degenerate(2, g).unwrap());
        let ((d, y), mu) = rep.ez_cube_factor(2, g).unwrap();
        assert_eq!(d, 1);
        assert!(cube_map(&rep, d, y).unwrap().is_identity());
        assert_eq!(mu, connection(1, 1, 1));
        for v in 0..rep.count(0) {
            assert!(!rep.is_degenerate(0, v).unwrap());
        }
    }

    #[test]
    fn restriction_keeps_cubes() {
        let rep = representable(Theory::POSET, 1, 2).unwrap();
        let r = restrict(&rep, Theory::MEET).unwrap();
        assert_eq!(r.counts(), rep.counts());
        let join = CubeMap::from_coords(2, 1, |a| vec![a[0] | a[1]]);
        let j = r.find(2, &CubeLabel::Map { map: join }).unwrap();
        assert!(!r.is_degenerate(2, j).unwrap());
        assert!(restrict(&r, Theory::POSET).is_err());
    }
}
