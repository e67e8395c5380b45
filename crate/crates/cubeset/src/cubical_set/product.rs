use std::collections::HashMap;
use std::sync::Arc;

use super::{CSMap, CubeLabel, CubeRef, CubicalSet};
use crate::cube_theory::{enumerate_hom, CubeMap, HomSet, Theory};
use crate::error::{Error, Result};

fn check_compatible(x: &CubicalSet, y: &CubicalSet) -> Result<()> {
    if x.theory() != y.theory() {
        return Err(Error::TheoryMismatch(x.theory(), y.theory()));
    }
    if x.truncation() != y.truncation() {
        return Err(Error::TruncationMismatch(x.truncation(), y.truncation()));
    }
    Ok(())
}

/// The levelwise product `X × Y` with its projections.
pub struct CartesianProduct {
    pub set: Arc<CubicalSet>,
    pub left: Arc<CubicalSet>,
    pub right: Arc<CubicalSet>,
    pub proj_left: CSMap,
    pub proj_right: CSMap,
}

impl CartesianProduct {
    /// Index of the pair `(x, y)` of `d`-cubes.
    pub fn pair(&self, d: usize, x: usize, y: usize) -> usize {
        x * self.right.count(d) + y
    }

    pub fn split(&self, d: usize, c: usize) -> (usize, usize) {
        let ny = self.right.count(d);
        (c / ny, c % ny)
    }
}

pub fn cartesian_product(x: &Arc<CubicalSet>, y: &Arc<CubicalSet>) -> Result<CartesianProduct> {
    check_compatible(x, y)?;
    let top = x.truncation();
    let labels = (0..=top)
        .map(|d| {
            (0..x.count(d))
                .flat_map(|a| (0..y.count(d)).map(move |b| CubeLabel::Pair { left: a, right: b }))
                .collect()
        })
        .collect();
    let set = CubicalSet::build(x.theory(), top, labels, |d, c, e, f| {
        let ny = y.count(d);
        let (a, b) = (c / ny, c % ny);
        Ok(x.act(d, a, f)? * y.count(e) + y.act(d, b, f)?)
    })?;
    let set = Arc::new(set);
    let comps = |left: bool| -> Vec<Vec<usize>> {
        (0..=top)
            .map(|d| {
                let ny = y.count(d);
                (0..set.count(d)).map(|c| if left { c / ny } else { c % ny }).collect()
            })
            .collect()
    };
    let proj_left = CSMap::new(set.clone(), x.clone(), comps(true))?;
    let proj_right = CSMap::new(set.clone(), y.clone(), comps(false))?;
    Ok(CartesianProduct { set, left: x.clone(), right: y.clone(), proj_left, proj_right })
}

struct Block {
    p: usize,
    q: usize,
    nx: usize,
    ny: usize,
    /// `homs[k]` is `◻_A(◻^k, ◻^{p+q})`.
    homs: Vec<Arc<HomSet>>,
    /// First cell id for each `k`.
    offsets: Vec<usize>,
}

impl Block {
    fn cell(&self, x: usize, y: usize, k: usize, phi: usize) -> usize {
        self.offsets[k] + (x * self.ny + y) * self.homs[k].len() + phi
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] as usize != a {
            let parent = self.0[a] as usize;
            self.0[a] = self.0[parent];
            a = parent;
        }
        a
    }

    /// Union keeping the smaller id as root.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo as u32;
        }
    }
}

/// The geometric product `X ⊗ Y`, truncated at `D`.
///
/// Its `k`-cubes are classes of formal cells `(x, y, φ)` with `x` a `p`-cube,
/// `y` a `q`-cube and `φ: ◻^k → ◻^{p+q}`, under the identifications
/// `(x ψ, y, φ) ~ (x, y, (ψ ⊗ id) φ)` and `(x, y ψ', φ) ~ (x, y, (id ⊗ ψ') φ)`.
/// Cells are formed for `p + q` up to the cell bound (by default `D`). Without
/// diagonals every `k`-cube comes from a cell with `p + q ≤ k`; with them the
/// bound must cover the dimensions of the cubes generating `X` and `Y`.
pub struct GeometricProduct {
    pub set: Arc<CubicalSet>,
    pub left: Arc<CubicalSet>,
    pub right: Arc<CubicalSet>,
    bound: usize,
    blocks: Vec<Block>,
    block_of: HashMap<(usize, usize), usize>,
    /// Cube index of every cell within its dimension.
    class: Vec<u32>,
}

pub fn geometric_product(x: &Arc<CubicalSet>, y: &Arc<CubicalSet>) -> Result<GeometricProduct> {
    geometric_product_bounded(x, y, x.truncation())
}

impl GeometricProduct {
    pub fn bound(&self) -> usize {
        self.bound
    }

    fn locate(&self, p: usize, q: usize) -> Option<&Block> {
        self.block_of.get(&(p, q)).map(|&b| &self.blocks[b])
    }

    /// The cube `(x ⊗ y) φ`, if its cell is within the bounds.
    pub fn cell_cube(&self, x: CubeRef, y: CubeRef, phi: &CubeMap) -> Option<usize> {
        let b = self.locate(x.0, y.0)?;
        let k = phi.dom();
        if k >= b.homs.len() || phi.cod() != x.0 + y.0 || x.1 >= b.nx || y.1 >= b.ny {
            return None;
        }
        let fi = b.homs[k].index_of(phi)?;
        Some(self.class[b.cell(x.1, y.1, k, fi)] as usize)
    }

    /// The cube `x ⊗ y` of dimension `p + q`.
    pub fn tensor_cube(&self, x: CubeRef, y: CubeRef) -> Option<usize> {
        self.cell_cube(x, y, &CubeMap::identity(x.0 + y.0))
    }

    /// A representative cell `(x, y, φ)` of a cube.
    pub fn representative(&self, k: usize, c: usize) -> (CubeRef, CubeRef, &CubeMap) {
        match self.set.label(k, c) {
            CubeLabel::Cell { x, y, phi } => (*x, *y, phi),
            _ => unreachable!("geometric product cubes carry cell labels"),
        }
    }
}

/// [`geometric_product`] with an explicit bound on `p + q` for formal cells.
pub fn geometric_product_bounded(x: &Arc<CubicalSet>, y: &Arc<CubicalSet>, bound: usize) -> Result<GeometricProduct> {
    check_compatible(x, y)?;
    let theory = x.theory();
    let top = x.truncation();
    let mut blocks = Vec::new();
    let mut block_of = HashMap::new();
    let mut total = 0usize;
    for p in 0..=top {
        for q in 0..=top {
            if p + q > bound {
                continue;
            }
            let homs: Vec<Arc<HomSet>> = (0..=top).map(|k| enumerate_hom(theory, k, p + q)).collect::<Result<_>>()?;
            let (nx, ny) = (x.count(p), y.count(q));
            let mut offsets = Vec::with_capacity(top + 1);
            for h in &homs {
                offsets.push(total);
                total += nx * ny * h.len();
            }
            block_of.insert((p, q), blocks.len());
            blocks.push(Block { p, q, nx, ny, homs, offsets });
        }
    }
    if total > u32::MAX as usize {
        return Err(Error::BoundsExceeded(format!("{total} formal cells")));
    }
    let mut uf = UnionFind((0..total as u32).collect());

    for src in &blocks {
        let (p, q) = (src.p, src.q);
        // Left moves: ψ: ◻^p → ◻^{p'}, cells of block (p, q) against (p', q).
        for psi in moves(theory, p, top)? {
            let Some(&ti) = block_of.get(&(psi.cod(), q)) else { continue };
            let tgt = &blocks[ti];
            let lift = psi.tensor(&CubeMap::identity(q));
            let tables = transport_tables(src, tgt, &lift)?;
            for xt in 0..tgt.nx {
                let xs = x.act(tgt.p, xt, &psi)?;
                for yy in 0..src.ny {
                    for (k, tab) in tables.iter().enumerate() {
                        for (fi, &gi) in tab.iter().enumerate() {
                            uf.union(src.cell(xs, yy, k, fi), tgt.cell(xt, yy, k, gi as usize));
                        }
                    }
                }
            }
        }
        // Right moves: ψ': ◻^q → ◻^{q'}.
        for psi in moves(theory, q, top)? {
            let Some(&ti) = block_of.get(&(p, psi.cod())) else { continue };
            let tgt = &blocks[ti];
            let lift = CubeMap::identity(p).tensor(&psi);
            let tables = transport_tables(src, tgt, &lift)?;
            for yt in 0..tgt.ny {
                let ys = y.act(tgt.q, yt, &psi)?;
                for xx in 0..src.nx {
                    for (k, tab) in tables.iter().enumerate() {
                        for (fi, &gi) in tab.iter().enumerate() {
                            uf.union(src.cell(xx, ys, k, fi), tgt.cell(xx, yt, k, gi as usize));
                        }
                    }
                }
            }
        }
    }

    let mut class = vec![u32::MAX; total];
    let mut labels: Vec<Vec<CubeLabel>> = vec![Vec::new(); top + 1];
    let mut reps: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); top + 1];
    let mut root_class: HashMap<usize, u32> = HashMap::new();
    // Nested iteration visits cell ids in increasing order.
    for (bi, b) in blocks.iter().enumerate() {
        for k in 0..=top {
            for xx in 0..b.nx {
                for yy in 0..b.ny {
                    for fi in 0..b.homs[k].len() {
                        let cell = b.cell(xx, yy, k, fi);
                        let r = uf.find(cell);
                        let c = if r == cell {
                            let c = labels[k].len() as u32;
                            labels[k].push(CubeLabel::Cell { x: (b.p, xx), y: (b.q, yy), phi: b.homs[k].get(fi).clone() });
                            reps[k].push((bi, xx, yy, fi));
                            root_class.insert(r, c);
                            c
                        } else {
                            root_class[&r]
                        };
                        class[cell] = c;
                    }
                }
            }
        }
    }

    let set = CubicalSet::build(theory, top, labels, |k, c, e, f| {
        let (bi, xx, yy, fi) = reps[k][c];
        let b = &blocks[bi];
        let g = b.homs[k].get(fi).after(f)?;
        let gi = b.homs[e].index_of(&g).ok_or(Error::NotMember(theory))?;
        Ok(class[b.cell(xx, yy, e, gi)] as usize)
    })?;
    Ok(GeometricProduct { set: Arc::new(set), left: x.clone(), right: y.clone(), bound, blocks, block_of, class })
}

/// Every non-identity map out of `◻^p` into dimensions up to `top`. Using all
/// of them, rather than generators only, keeps the relation complete when the
/// composites of generators pass through blocks beyond the cell bound.
fn moves(theory: Theory, p: usize, top: usize) -> Result<Vec<CubeMap>> {
    let mut out = Vec::new();
    for c in 0..=top {
        let h = enumerate_hom(theory, p, c)?;
        out.extend(h.maps().iter().filter(|m| !m.is_identity()).cloned());
    }
    Ok(out)
}

/// For each `k`, the index in `tgt` of `lift ∘ φ` for every `φ` of `src`.
fn transport_tables(src: &Block, tgt: &Block, lift: &CubeMap) -> Result<Vec<Vec<u32>>> {
    src.homs
        .iter()
        .zip(&tgt.homs)
        .map(|(hs, ht)| {
            hs.maps()
                .iter()
                .map(|phi| {
                    let g = lift.after(phi)?;
                    ht.index_of(&g).map(|i| i as u32).ok_or(Error::Inconsistent(format!("{g} missing")))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::representable;
    use super::*;

    #[test]
    fn cartesian_counts() {
        let i = representable(Theory::MEET, 1, 2).unwrap();
        let p = cartesian_product(&i, &i).unwrap();
        assert_eq!(p.set.count(0), 4);
        assert_eq!(p.set.count(1), 9);
        p.proj_left.check_naturality(2).unwrap();
        p.proj_right.check_naturality(2).unwrap();
        p.set.check_functoriality(2).unwrap();
    }

    #[test]
    fn product_of_cubes_is_a_cube() {
        for t in [Theory::EMPTY, Theory::MEET] {
            for (m, n) in [(0, 1), (1, 1), (1, 2), (2, 1)] {
                let g = geometric_product(&representable(t, m, 3).unwrap(), &representable(t, n, 3).unwrap()).unwrap();
                assert_eq!(g.set.counts(), representable(t, m + n, 3).unwrap().counts(), "{t} {m} {n}");
            }
        }
    }
}
