//! Change of theory along `◻_A ⊆ ◻_B`: restriction `i^*`, the left Kan
//! extension `i_!` with its unit, monoidality of `i_!`, and the comparison
//! maps between geometric and cartesian products.

use std::sync::Arc;

use serde::Serialize;

use crate::cube_theory::{active_face_factor, enumerate_hom, is_member, CubeMap, HomSet, Symbol, Theory};
use crate::cubical_set::{
    cartesian_product, cube_map, geometric_product, geometric_product_bounded, representable, CSMap, CartesianProduct,
    CubeLabel, CubeRef, CubicalSet, GeometricProduct, Subcomplex,
};
use crate::decomposition::{front_deletion, last_deletion, long_diagonal};
use crate::error::{Error, Result};

pub use crate::cubical_set::restrict;

/// A cube `x φ` of `i_! X` in normal form: `x` a non-degenerate cube of `X`
/// and `φ` an active map of the larger theory.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalPair {
    pub seed: CubeRef,
    pub act: CubeMap,
}

#[derive(Serialize)]
struct NormalPairRepr<'a> {
    seed_label: &'a CubeLabel,
    act: &'a CubeMap,
}

impl NormalPair {
    /// `{seed_label, act}` with the seed described by its label in `x`.
    pub fn to_json(&self, x: &CubicalSet) -> serde_json::Value {
        let repr = NormalPairRepr { seed_label: x.label(self.seed.0, self.seed.1), act: &self.act };
        serde_json::to_value(repr).expect("normal pairs serialize")
    }
}

/// `i_! X` together with the unit `X → i^* i_! X`.
pub struct LeftExtension {
    pub source: Arc<CubicalSet>,
    pub set: Arc<CubicalSet>,
    /// `i^* i_! X`.
    pub restricted: Arc<CubicalSet>,
    pub unit: CSMap,
    /// `homs[m][p]` is `◻_B(◻^m, ◻^p)`.
    homs: Vec<Vec<Arc<HomSet>>>,
    /// Rank of each cube of `X` among the non-degenerate ones of its dimension.
    seed_rank: Vec<Vec<Option<usize>>>,
    /// `offsets[m][p][r]` is the first `m`-cube with the `r`-th seed of dimension `p`.
    offsets: Vec<Vec<Vec<usize>>>,
    /// `active_rank[m][p][g]` is the rank of map `g` among the active maps `m → p`.
    active_rank: Vec<Vec<Vec<Option<usize>>>>,
}

fn require_ez(a: Theory, b: Theory) -> Result<()> {
    if !a.is_ez() {
        return Err(Error::NotEzTheory(a));
    }
    if !a.is_subtheory_of(b) {
        return Err(Error::NotSubtheory { sub: a, sup: b });
    }
    Ok(())
}

/// Reduce `x g` (with `x` any `p`-cube of `X` and `g` a `B`-map into `◻^p`)
/// to normal form by pushing faces into the seed and stripping degeneracies.
fn normalize(x: &CubicalSet, mut p: usize, mut seed: usize, mut g: CubeMap) -> Result<(CubeRef, CubeMap)> {
    loop {
        let (kappa, rest) = active_face_factor(&g);
        let x1 = x.act(p, seed, &kappa.to_map())?;
        let ((q, z), mu) = x.ez_cube_factor(kappa.source(), x1)?;
        if kappa.is_empty() && mu.is_identity() {
            return Ok(((p, seed), g));
        }
        g = mu.after(&rest)?;
        p = q;
        seed = z;
    }
}

impl LeftExtension {
    pub fn theory(&self) -> Theory {
        self.set.theory()
    }

    /// The cube `x g` of `i_! X` for any `p`-cube `x` of `X` and `B`-map `g`.
    pub fn cube_of(&self, p: usize, x: usize, g: &CubeMap) -> Result<usize> {
        let ((q, z), act) = normalize(&self.source, p, x, g.clone())?;
        self.index_of_pair(q, z, &act)
    }

    fn index_of_pair(&self, p: usize, x: usize, act: &CubeMap) -> Result<usize> {
        let m = act.dom();
        let bad = || Error::Inconsistent(format!("{act} on seed {p}:{x} is not a normal pair"));
        let r = self.seed_rank[p][x].ok_or_else(bad)?;
        let gi = self.homs[m][p].index_of(act).ok_or(Error::NotMember(self.theory()))?;
        let a = self.active_rank[m][p][gi].ok_or_else(bad)?;
        Ok(self.offsets[m][p][r] + a)
    }

    /// The normal pair describing an `m`-cube.
    pub fn pair(&self, m: usize, c: usize) -> NormalPair {
        match self.set.label(m, c) {
            CubeLabel::Normal { seed, act } => NormalPair { seed: *seed, act: act.clone() },
            _ => unreachable!("extension cubes carry normal labels"),
        }
    }
}

/// `i_! X` for `X` over `A ⊆ {∧, ∨}` and `B ⊇ A`.
pub fn left_extend(x: &Arc<CubicalSet>, b: Theory) -> Result<LeftExtension> {
    let a = x.theory();
    require_ez(a, b)?;
    let top = x.truncation();
    let homs: Vec<Vec<Arc<HomSet>>> =
        (0..=top).map(|m| (0..=top).map(|p| enumerate_hom(b, m, p)).collect()).collect::<Result<_>>()?;
    let seeds: Vec<Vec<usize>> = (0..=top).map(|p| x.nondegenerate(p)).collect::<Result<_>>()?;
    let seed_rank: Vec<Vec<Option<usize>>> = (0..=top)
        .map(|p| {
            let mut r = vec![None; x.count(p)];
            for (i, &s) in seeds[p].iter().enumerate() {
                r[s] = Some(i);
            }
            r
        })
        .collect();
    let active_rank: Vec<Vec<Vec<Option<usize>>>> = homs
        .iter()
        .map(|row| {
            row.iter()
                .map(|h| {
                    let mut r = vec![None; h.len()];
                    for (i, &g) in h.active_indices().iter().enumerate() {
                        r[g] = Some(i);
                    }
                    r
                })
                .collect()
        })
        .collect();

    let mut labels: Vec<Vec<CubeLabel>> = vec![Vec::new(); top + 1];
    let mut decode: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); top + 1];
    let mut offsets = vec![vec![Vec::new(); top + 1]; top + 1];
    for m in 0..=top {
        for p in 0..=top {
            for (r, &s) in seeds[p].iter().enumerate() {
                offsets[m][p].push(labels[m].len());
                for &g in homs[m][p].active_indices() {
                    labels[m].push(CubeLabel::Normal { seed: (p, s), act: homs[m][p].get(g).clone() });
                    decode[m].push((p, r, g));
                }
            }
        }
    }

    let mut ext = LeftExtension {
        source: x.clone(),
        set: Arc::new(CubicalSet::empty(b, top)?),
        restricted: Arc::new(CubicalSet::empty(a, top)?),
        unit: CSMap::identity(x),
        homs,
        seed_rank,
        offsets,
        active_rank,
    };

    // norm[p][r][e][g]: the cube `s g` for the r-th seed s of dimension p.
    let mut norm: Vec<Vec<Vec<Vec<u32>>>> = Vec::with_capacity(top + 1);
    for p in 0..=top {
        let mut per_seed = Vec::with_capacity(seeds[p].len());
        for &s in &seeds[p] {
            let mut per_e = Vec::with_capacity(top + 1);
            for e in 0..=top {
                let tab = ext.homs[e][p]
                    .maps()
                    .iter()
                    .map(|g| ext.cube_of(p, s, g).map(|c| c as u32))
                    .collect::<Result<Vec<u32>>>()?;
                per_e.push(tab);
            }
            per_seed.push(per_e);
        }
        norm.push(per_seed);
    }

    let homs = &ext.homs;
    let set = CubicalSet::build(b, top, labels, |m, c, e, f| {
        let (p, r, gi) = decode[m][c];
        let g = homs[m][p].get(gi).after(f)?;
        let gj = homs[e][p].index_of(&g).ok_or(Error::NotMember(b))?;
        Ok(norm[p][r][e][gj] as usize)
    })?;
    let set = Arc::new(set);
    let restricted = restrict(&set, a)?;
    ext.set = set;
    ext.restricted = restricted.clone();
    let components = (0..=top)
        .map(|d| (0..x.count(d)).map(|c| ext.cube_of(d, c, &CubeMap::identity(d))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ext.unit = CSMap::new(x.clone(), restricted, components)?;
    Ok(ext)
}

/// `i_! f`, sending `x φ` to `f(x) φ`.
pub fn left_extend_map(f: &CSMap, source: &LeftExtension, target: &LeftExtension) -> Result<CSMap> {
    if !Arc::ptr_eq(&f.source, &source.source) || !Arc::ptr_eq(&f.target, &target.source) {
        return Err(Error::Inconsistent("extensions do not match the map".into()));
    }
    if source.theory() != target.theory() {
        return Err(Error::TheoryMismatch(source.theory(), target.theory()));
    }
    let top = source.set.truncation();
    let components = (0..=top)
        .map(|m| {
            (0..source.set.count(m))
                .map(|c| {
                    let NormalPair { seed: (p, x), act } = source.pair(m, c);
                    target.cube_of(p, f.apply(p, x), &act)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CSMap::new(source.set.clone(), target.set.clone(), components)
}

/// For `X` whose cubes are maps into `◻^n` (a representable or a subcomplex
/// of one), the map `i_! X → ◻^n_B` sending `x φ` to the composite `x φ`.
pub fn evaluate_into_representable(ext: &LeftExtension, target: &Arc<CubicalSet>) -> Result<CSMap> {
    let top = ext.set.truncation();
    let components = (0..=top)
        .map(|m| {
            (0..ext.set.count(m))
                .map(|c| {
                    let NormalPair { seed: (p, x), act } = ext.pair(m, c);
                    let seed = cube_map(&ext.source, p, x)
                        .ok_or_else(|| Error::Inconsistent("seed is not labelled by a map".into()))?;
                    target.find_map(m, &seed.after(&act)?)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CSMap::new(ext.set.clone(), target.clone(), components)
}

/// Largest dimension of a non-degenerate cube, if any.
fn top_seed(x: &CubicalSet) -> Result<usize> {
    let nd = x.nondegenerate_counts()?;
    Ok(nd.iter().rposition(|&c| c > 0).unwrap_or(0))
}

/// The comparison `i_!(X ⊗ Y) → i_! X ⊗ i_! Y` together with its pieces.
pub struct Monoidality {
    pub product: GeometricProduct,
    pub extended_product: LeftExtension,
    pub left: LeftExtension,
    pub right: LeftExtension,
    pub product_of_extensions: GeometricProduct,
    pub iso: CSMap,
}

/// The comparison map of `i_!` with geometric products, sending the normal
/// pair `((x ⊗ y) χ) φ` to `(η x ⊗ η y) χ φ`.
pub fn monoidality_iso(x: &Arc<CubicalSet>, y: &Arc<CubicalSet>, b: Theory) -> Result<Monoidality> {
    require_ez(x.theory(), b)?;
    let product = geometric_product(x, y)?;
    let extended_product = left_extend(&product.set, b)?;
    let left = left_extend(x, b)?;
    let right = left_extend(y, b)?;
    // Every cell reduces to one on seeds, so the seed dimensions bound the cells needed.
    let bound = top_seed(x)? + top_seed(y)?;
    let product_of_extensions = geometric_product_bounded(&left.set, &right.set, bound)?;
    let top = x.truncation();
    let components = (0..=top)
        .map(|m| {
            (0..extended_product.set.count(m))
                .map(|c| {
                    let NormalPair { seed: (p, s), act } = extended_product.pair(m, c);
                    let (xr, yr, chi) = product.representative(p, s);
                    let u = left.unit.apply(xr.0, xr.1);
                    let v = right.unit.apply(yr.0, yr.1);
                    product_of_extensions
                        .cell_cube((xr.0, u), (yr.0, v), &chi.after(&act)?)
                        .ok_or_else(|| Error::BoundsExceeded(format!("cell of dimension {} outside the product", xr.0 + yr.0)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = CSMap::new(extended_product.set.clone(), product_of_extensions.set.clone(), components)?;
    Ok(Monoidality { product, extended_product, left, right, product_of_extensions, iso })
}

fn same_factors(g: &GeometricProduct, c: &CartesianProduct) -> Result<()> {
    if !Arc::ptr_eq(&g.left, &c.left) || !Arc::ptr_eq(&g.right, &c.right) {
        return Err(Error::Inconsistent("products are over different factors".into()));
    }
    Ok(())
}

/// `X ⊗ Y → X × Y`, sending `(x ⊗ y) φ` to `(x σ^L φ, y σ^F φ)`.
pub fn geo_to_cart(g: &GeometricProduct, c: &CartesianProduct) -> Result<CSMap> {
    same_factors(g, c)?;
    let (x, y) = (&g.left, &g.right);
    let top = x.truncation();
    let components = (0..=top)
        .map(|k| {
            (0..g.set.count(k))
                .map(|cube| {
                    let ((p, xi), (q, yi), phi) = g.representative(k, cube);
                    let a = x.act(p, xi, &last_deletion(p, q).after(phi)?)?;
                    let b = y.act(q, yi, &front_deletion(p, q).after(phi)?)?;
                    Ok(c.pair(k, a, b))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CSMap::new(g.set.clone(), c.set.clone(), components)
}

/// `X × Y → i^* i_!(X ⊗ Y)`, sending `(x, y)` to `(x ⊗ y) D_n`. Both
/// cubes are first reduced to non-degenerate ones, `x = x' μ` and
/// `y = y' ν`, and the pair is sent to `(x' ⊗ y')(μ ⊗ ν) D_n`.
pub fn cart_to_extended(c: &CartesianProduct, g: &GeometricProduct, ext: &LeftExtension) -> Result<CSMap> {
    same_factors(g, c)?;
    if !Arc::ptr_eq(&ext.source, &g.set) {
        return Err(Error::Inconsistent("extension is not of the geometric product".into()));
    }
    let b = ext.theory();
    for s in [Symbol::Sigma, Symbol::Delta] {
        if !b.contains(s) {
            return Err(Error::MissingSymbol(b, s.name()));
        }
    }
    let (x, y) = (&c.left, &c.right);
    let top = x.truncation();
    let components = (0..=top)
        .map(|n| {
            (0..c.set.count(n))
                .map(|cube| {
                    let (u, v) = c.split(n, cube);
                    let ((p, u1), mu) = x.ez_cube_factor(n, u)?;
                    let ((q, v1), nu) = y.ez_cube_factor(n, v)?;
                    let t = g
                        .tensor_cube((p, u1), (q, v1))
                        .ok_or_else(|| Error::BoundsExceeded(format!("seed of dimension {} above the truncation", p + q)))?;
                    ext.cube_of(p + q, t, &mu.tensor(&nu).after(&long_diagonal(n))?)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CSMap::new(c.set.clone(), ext.restricted.clone(), components)
}

/// Every object of the geometric/cartesian comparison for one pair `X, Y`.
pub struct ProductComparison {
    pub geometric: GeometricProduct,
    pub cartesian: CartesianProduct,
    pub extension: LeftExtension,
    pub geo_to_cart: CSMap,
    pub cart_to_extended: CSMap,
}

impl ProductComparison {
    pub fn build(x: &Arc<CubicalSet>, y: &Arc<CubicalSet>, b: Theory) -> Result<ProductComparison> {
        let geometric = geometric_product(x, y)?;
        let cartesian = cartesian_product(x, y)?;
        let extension = left_extend(&geometric.set, b)?;
        let g2c = geo_to_cart(&geometric, &cartesian)?;
        let c2e = cart_to_extended(&cartesian, &geometric, &extension)?;
        Ok(ProductComparison { geometric, cartesian, extension, geo_to_cart: g2c, cart_to_extended: c2e })
    }

    /// Whether `cart_to_extended ∘ geo_to_cart` is the unit of `i_!(X ⊗ Y)`.
    pub fn composite_is_unit(&self) -> Result<bool> {
        let composite = self.geo_to_cart.then(&self.cart_to_extended)?;
        Ok(composite.components == self.extension.unit.components)
    }
}

/// Whether `σ^F_m φ` and `σ^L_n φ` both lie in `◻_A`, for `φ: ◻^k → ◻^{m+n}`.
pub fn cartesian_image_member(phi: &CubeMap, m: usize, n: usize, a: Theory) -> Result<bool> {
    if phi.cod() != m + n {
        return Err(Error::DimensionMismatch { expected: m + n, found: phi.cod() });
    }
    Ok(is_member(a, &front_deletion(m, n).after(phi)?)? && is_member(a, &last_deletion(m, n).after(phi)?)?)
}

/// The image of `◻^m_A × ◻^n_A → i^* ◻^{m+n}_B`, `(u, v) ↦ (a ↦ (u(a), v(a)))`,
/// computed by enumerating pairs.
pub fn cartesian_image_direct(a: Theory, b: Theory, m: usize, n: usize, truncation: usize) -> Result<Subcomplex> {
    let target = restrict(&representable(b, m + n, truncation)?, a)?;
    let mut members: Vec<Vec<bool>> = (0..=truncation).map(|d| vec![false; target.count(d)]).collect();
    for k in 0..=truncation {
        let (hu, hv) = (enumerate_hom(a, k, m)?, enumerate_hom(a, k, n)?);
        for u in hu.maps() {
            for v in hv.maps() {
                let pair = CubeMap::from_fn(k, m + n, |w| (u.apply(w) << n) | v.apply(w));
                members[k][target.find_map(k, &pair)?] = true;
            }
        }
    }
    Subcomplex::from_predicate(&target, |d, x| members[d][x])
}

/// The same image, through `◻^m × ◻^n → i^* i_!(◻^m ⊗ ◻^n) ≅ i^* ◻^{m+n}_B`.
pub fn cartesian_image_pipeline(a: Theory, b: Theory, m: usize, n: usize, truncation: usize) -> Result<Subcomplex> {
    let x = representable(a, m, truncation)?;
    let y = representable(a, n, truncation)?;
    let cmp = ProductComparison::build(&x, &y, b)?;
    let full = representable(b, m + n, truncation)?;
    let target = restrict(&full, a)?;
    let g = &cmp.geometric;
    let ext = &cmp.extension;
    let top = truncation;
    let mut members: Vec<Vec<bool>> = (0..=top).map(|d| vec![false; target.count(d)]).collect();
    for d in 0..=top {
        for c in 0..cmp.cartesian.set.count(d) {
            let e = cmp.cart_to_extended.apply(d, c);
            let NormalPair { seed: (p, s), act } = ext.pair(d, e);
            let ((xp, xi), (yq, yi), chi) = g.representative(p, s);
            let xm = cube_map(&x, xp, xi).expect("map label");
            let ym = cube_map(&y, yq, yi).expect("map label");
            let total = xm.tensor(ym).after(chi)?.after(&act)?;
            members[d][target.find_map(d, &total)?] = true;
        }
    }
    Subcomplex::from_predicate(&target, |d, x| members[d][x])
}

/// The zigzag `X ⊗ Y ↪ Z ≅ Z' ↩ Y ⊗ X` with `Z = i^* i_!(X ⊗ Y)` and
/// `Z' = i^* i_!(Y ⊗ X)`.
pub struct SymmetryZigzag {
    pub forward: GeometricProduct,
    pub backward: GeometricProduct,
    pub forward_ext: LeftExtension,
    pub backward_ext: LeftExtension,
    /// `Z → Z'`, induced by the block transposition `◻^{p+q} → ◻^{q+p}`.
    pub iso: CSMap,
}

impl SymmetryZigzag {
    pub fn left_leg(&self) -> &CSMap {
        &self.forward_ext.unit
    }

    pub fn right_leg(&self) -> &CSMap {
        &self.backward_ext.unit
    }
}

/// `τ_{p,q}: ◻^{p+q} → ◻^{q+p}`, `(a, b) ↦ (b, a)`.
pub fn block_transposition(p: usize, q: usize) -> CubeMap {
    let qmask = (1u32 << q) - 1;
    CubeMap::from_fn(p + q, q + p, |v| ((v & qmask) << p) | (v >> q))
}

pub fn symmetry_zigzag(x: &Arc<CubicalSet>, y: &Arc<CubicalSet>, b: Theory) -> Result<SymmetryZigzag> {
    require_ez(x.theory(), b)?;
    if !b.contains(Symbol::Sigma) {
        return Err(Error::MissingSymbol(b, Symbol::Sigma.name()));
    }
    if !b.contains(Symbol::Meet) && !b.contains(Symbol::Join) {
        return Err(Error::MissingSymbol(b, "connection"));
    }
    let forward = geometric_product(x, y)?;
    let backward = geometric_product(y, x)?;
    let forward_ext = left_extend(&forward.set, b)?;
    let backward_ext = left_extend(&backward.set, b)?;
    let top = x.truncation();
    let components = (0..=top)
        .map(|m| {
            (0..forward_ext.set.count(m))
                .map(|c| {
                    let NormalPair { seed: (p, s), act } = forward_ext.pair(m, c);
                    let (xr, yr, chi) = forward.representative(p, s);
                    let swapped = backward
                        .tensor_cube(yr, xr)
                        .ok_or_else(|| Error::BoundsExceeded("swapped cell outside the product".into()))?;
                    let g = block_transposition(xr.0, yr.0).after(chi)?.after(&act)?;
                    backward_ext.cube_of(xr.0 + yr.0, swapped, &g)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = CSMap::new(forward_ext.set.clone(), backward_ext.set.clone(), components)?;
    Ok(SymmetryZigzag { forward, backward, forward_ext, backward_ext, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical_set::boundary;

    #[test]
    fn extension_of_a_representable() {
        let x = representable(Theory::MEET, 1, 2).unwrap();
        let ext = left_extend(&x, Theory::POSET).unwrap();
        let rep = representable(Theory::POSET, 1, 2).unwrap();
        assert_eq!(ext.set.counts(), rep.counts());
        let ev = evaluate_into_representable(&ext, &rep).unwrap();
        assert!(ev.is_bijective());
        ev.check_naturality(2).unwrap();
        assert!(ext.unit.is_injective());
    }

    #[test]
    fn extension_of_a_boundary() {
        let (bd, _) = boundary(Theory::MEET, 2, 2).unwrap().to_set().unwrap();
        let ext = left_extend(&bd, Theory::POSET).unwrap();
        ext.set.check_functoriality(2).unwrap();
        assert!(ext.unit.is_injective());
        let refuse = left_extend(&representable(Theory::MEET.with(Symbol::Sigma), 1, 2).unwrap(), Theory::POSET);
        assert!(refuse.is_err());
    }

    #[test]
    fn product_maps_over_poset() {
        let i = representable(Theory::MEET, 1, 2).unwrap();
        let cmp = ProductComparison::build(&i, &i, Theory::POSET).unwrap();
        cmp.geo_to_cart.check_naturality(2).unwrap();
        cmp.cart_to_extended.check_naturality(2).unwrap();
        assert!(cmp.composite_is_unit().unwrap());
    }

    #[test]
    fn block_transposition_swaps() {
        let t = block_transposition(1, 2);
        assert_eq!(t.apply(0b100), 0b001);
        assert_eq!(t.apply(0b011), 0b110);
        assert!(block_transposition(0, 2).is_identity());
    }
}
