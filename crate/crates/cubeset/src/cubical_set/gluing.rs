use std::sync::Arc;

use super::{boundary, representable, CSMap, CubeLabel, CubicalSet};
use crate::cube_theory::{face, CubeMap, Theory};
use crate::error::{Error, Result};

/// `∂◻^n` assembled as a colimit: one copy of `◻^{n-1}` per face
/// `(i, ε)`, glued along the copies of `◻^{n-2}` shared by pairs of faces.
pub struct GluedBoundary {
    pub set: Arc<CubicalSet>,
    /// The canonical map into the union-of-faces boundary, sending the cube
    /// `y` on face `(i, ε)` to `∂_{i,ε} y`.
    pub comparison: CSMap,
    /// Whether every cell of a class has the same image under the comparison.
    pub well_defined: bool,
}

fn faces_of(n: usize) -> Vec<(usize, u8)> {
    (1..=n).flat_map(|i| [(i, 0), (i, 1)]).collect()
}

pub fn boundary_by_gluing(theory: Theory, n: usize, truncation: usize) -> Result<GluedBoundary> {
    let faces = faces_of(n);
    let target_sub = boundary(theory, n, truncation)?;
    let (target, _) = target_sub.to_set()?;
    if n == 0 {
        let set = Arc::new(CubicalSet::empty(theory, truncation)?);
        let comparison = CSMap::new(set.clone(), target, vec![Vec::new(); truncation + 1])?;
        return Ok(GluedBoundary { set, comparison, well_defined: true });
    }
    let copy = representable(theory, n - 1, truncation)?;
    let per = |d: usize| copy.count(d);
    let cell = |d: usize, f: usize, y: usize| f * per(d) + y;

    let mut parent: Vec<Vec<usize>> = (0..=truncation).map(|d| (0..faces.len() * per(d)).collect()).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    if n >= 2 {
        let overlap = representable(theory, n - 2, truncation)?;
        for (fa, &(i, e)) in faces.iter().enumerate() {
            for (fb, &(j, e2)) in faces.iter().enumerate() {
                if i >= j {
                    continue;
                }
                // ∂_{j,ε'} ∂_{i,ε} = ∂_{i,ε} ∂_{j-1,ε'}
                let into_a = face(n - 1, j - 1, e2);
                let into_b = face(n - 1, i, e);
                for d in 0..=truncation {
                    for z in 0..overlap.count(d) {
                        let zm = super::cube_map(&overlap, d, z).expect("map label");
                        let ya = copy.find_map(d, &into_a.after(zm)?)?;
                        let yb = copy.find_map(d, &into_b.after(zm)?)?;
                        let (ra, rb) = (find(&mut parent[d], cell(d, fa, ya)), find(&mut parent[d], cell(d, fb, yb)));
                        if ra != rb {
                            let (lo, hi) = (ra.min(rb), ra.max(rb));
                            parent[d][hi] = lo;
                        }
                    }
                }
            }
        }
    }

    let mut class: Vec<Vec<usize>> = Vec::new();
    let mut labels: Vec<Vec<CubeLabel>> = Vec::new();
    let mut reps: Vec<Vec<(usize, usize)>> = Vec::new();
    for d in 0..=truncation {
        let total = faces.len() * per(d);
        let mut cls = vec![usize::MAX; total];
        let mut lab = Vec::new();
        let mut rep = Vec::new();
        for c in 0..total {
            let r = find(&mut parent[d], c);
            if r == c {
                cls[c] = lab.len();
                let (f, y) = (c / per(d), c % per(d));
                let map = super::cube_map(&copy, d, y).expect("map label").clone();
                lab.push(CubeLabel::Glued { face: faces[f], map });
                rep.push((f, y));
            } else {
                cls[c] = cls[r];
            }
        }
        class.push(cls);
        labels.push(lab);
        reps.push(rep);
    }

    let set = CubicalSet::build(theory, truncation, labels, |d, c, e, f| {
        let (fi, y) = reps[d][c];
        let y2 = copy.act(d, y, f)?;
        Ok(class[e][cell(e, fi, y2)])
    })?;
    let set = Arc::new(set);

    let image = |d: usize, f: usize, y: usize| -> Result<usize> {
        let (i, e) = faces[f];
        let m = face(n, i, e).after(super::cube_map(&copy, d, y).expect("map label"))?;
        target.find_map(d, &m)
    };
    let mut components = Vec::new();
    let mut well_defined = true;
    for d in 0..=truncation {
        let comp: Vec<usize> = reps[d].iter().map(|&(f, y)| image(d, f, y)).collect::<Result<_>>()?;
        for c in 0..faces.len() * per(d) {
            let (f, y) = (c / per(d), c % per(d));
            if image(d, f, y)? != comp[class[d][c]] {
                well_defined = false;
            }
        }
        components.push(comp);
    }
    let comparison = CSMap::new(set.clone(), target, components)?;
    Ok(GluedBoundary { set, comparison, well_defined })
}

impl CubicalSet {
    /// Index of the cube labelled by the map `m`.
    pub fn find_map(&self, d: usize, m: &CubeMap) -> Result<usize> {
        self.find(d, &CubeLabel::Map { map: m.clone() })
            .ok_or_else(|| Error::Inconsistent(format!("no cube labelled {m}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glued_square_boundary() {
        let g = boundary_by_gluing(Theory::EMPTY, 2, 2).unwrap();
        assert!(g.well_defined);
        assert!(g.comparison.is_bijective());
        g.comparison.check_naturality(2).unwrap();
        assert_eq!(g.set.nondegenerate_counts().unwrap(), vec![4, 4, 0]);
    }
}
