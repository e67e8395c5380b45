//! Exhaustive sweeps of the combinatorial identities, one suite per family.
//!
//! Each suite enumerates every case within its bounds and records a
//! reproducer (theory, dimensions, map tables) for every failure.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::anodyne::{certify, single_field_mutations, verify, verify_json, CertifyRequest, SubcomplexSpec};
use crate::comparison::{
    cartesian_image_direct, cartesian_image_member, cartesian_image_pipeline, evaluate_into_representable, geo_to_cart,
    left_extend, left_extend_map, ProductComparison,
};
use crate::cube_theory::{
    active_face_factor, connection, coord, enumerate_hom, enumerate_hom_closure, face, fixed_coordinates,
    generators_from, is_active, is_member, projection, CubeMap, FaceList, Symbol, Theory,
};
use crate::cubical_set::{
    boundary, boundary_by_gluing, cartesian_product, cube_map, geometric_product, geometric_product_bounded,
    open_box, representable, CSMap, CubicalSet, Subcomplex,
};
use crate::decomposition::{
    critical_edge, front_deletion, last_deletion, long_diagonal, split_tail, standard_decomposition,
    standard_decomposition_composite, stats, tail_length, Flavor,
};
use crate::error::{Error, Result};

/// Failures kept in a report; the total is always counted.
pub const MAX_REPORTED: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Bounds {
    pub max_dim: usize,
    pub max_k: usize,
    /// Restrict the sweep to one theory; `None` runs the suite's default list.
    pub theory: Option<Theory>,
    pub flavor: Flavor,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseFailure {
    pub law: String,
    pub theory: Option<Theory>,
    pub dims: Vec<usize>,
    pub maps: Vec<CubeMap>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub suite: String,
    pub bounds: Bounds,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<CaseFailure>,
    /// Parameter tuples left out, with the reason.
    pub skipped: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

struct Sweep {
    theory: Option<Theory>,
    cases: u64,
    failure_count: u64,
    failures: Vec<CaseFailure>,
    skipped: Vec<String>,
}

impl Sweep {
    fn check(&mut self, ok: bool, law: impl FnOnce() -> String, dims: &[usize], maps: &[&CubeMap]) {
        self.cases += 1;
        if ok {
            return;
        }
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(CaseFailure {
                law: law(),
                theory: self.theory,
                dims: dims.to_vec(),
                maps: maps.iter().map(|m| (*m).clone()).collect(),
            });
        }
    }

    fn check_result(&mut self, r: std::result::Result<(), String>, law: &str) {
        let msg = r.as_ref().err().cloned();
        self.check(r.is_ok(), || format!("{law}: {}", msg.unwrap_or_default()), &[], &[]);
    }

    fn skip(&mut self, why: String) {
        self.skipped.push(why);
    }
}

type SuiteFn = fn(&Bounds, &mut Sweep) -> Result<()>;

pub struct Suite {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_dim: usize,
    run: SuiteFn,
}

/// Every suite, in listing order.
pub const SUITES: &[Suite] = &[
    Suite { id: "cubical-identities", summary: "σ∂, γ∂ identities among generators", default_dim: 4, run: cubical_identities },
    Suite { id: "hom", summary: "hom-set closure, fast paths against generator closure, direct oracles", default_dim: 3, run: hom },
    Suite { id: "factorization", summary: "active-face factorization round-trips and is unique", default_dim: 3, run: factorization },
    Suite { id: "active-poset", summary: "activity of monotone maps by their endpoints", default_dim: 3, run: active_poset },
    Suite { id: "face-pullback", summary: "factoring through two faces is factoring through their intersection", default_dim: 3, run: face_pullback },
    Suite { id: "tensor-faithful", summary: "the tensor product of maps is injective on pairs", default_dim: 2, run: tensor_faithful },
    Suite { id: "degen-one-face", summary: "no degenerate cube has exactly one face equal to a non-degenerate cube", default_dim: 3, run: degen_one_face },
    Suite { id: "long-diagonal", summary: "naturality of long diagonals and their deletion retraction", default_dim: 2, run: long_diagonals },
    Suite { id: "n-explicit", summary: "closed form of N_k agrees with its defining composite", default_dim: 2, run: n_explicit },
    Suite { id: "n-identities", summary: "N_k against degeneracies, connections and faces", default_dim: 2, run: n_identities },
    Suite { id: "n-faces", summary: "faces of N_k and the trichotomy of low faces", default_dim: 2, run: n_faces },
    Suite { id: "n-active", summary: "N_k of an active map is active", default_dim: 2, run: n_active },
    Suite { id: "n-k-tensor", summary: "N_{j+k} = N_j ⊗ ◻^k", default_dim: 2, run: n_k_tensor },
    Suite { id: "n-tail-length", summary: "N_k of an active map has tail length k", default_dim: 2, run: n_tail_length },
    Suite { id: "n-right-tensor", summary: "N_k(φ ⊗ ◻^1) and N_k(N_0 φ) are degenerate", default_dim: 2, run: n_right_tensor },
    Suite { id: "n-crit-edge", summary: "critical edge of N_k(φ) is degenerate for monotone theories", default_dim: 2, run: n_crit_edge },
    Suite { id: "functoriality", summary: "action functoriality and naturality of constructed sets and maps", default_dim: 2, run: functoriality },
    Suite { id: "geometric-representables", summary: "◻^m ⊗ ◻^n ≅ ◻^{m+n} and X ⊗ ◻^0 ≅ X", default_dim: 3, run: geometric_representables },
    Suite { id: "boundary-gluing", summary: "boundary as a union of faces agrees with the gluing of its faces", default_dim: 3, run: boundary_gluing },
    Suite { id: "kan-extension", summary: "left Kan extension on representables, units, boundaries and open boxes", default_dim: 3, run: kan_extension },
    Suite { id: "product-comparison", summary: "geometric against cartesian products and the cartesian image", default_dim: 3, run: product_comparison },
    Suite { id: "anodyne", summary: "filling certificates certify, verify and reject corruption", default_dim: 3, run: anodyne },
];

pub fn find_suite(id: &str) -> Result<&'static Suite> {
    SUITES.iter().find(|s| s.id == id).ok_or_else(|| Error::Parse(format!("unknown suite `{id}`")))
}

pub fn default_bounds(id: &str) -> Result<Bounds> {
    let s = find_suite(id)?;
    Ok(Bounds { max_dim: s.default_dim, max_k: 2, theory: None, flavor: Flavor::Meet })
}

/// Run one suite.
pub fn run(id: &str, bounds: &Bounds) -> Result<SweepReport> {
    let suite = find_suite(id)?;
    let mut sweep = Sweep { theory: None, cases: 0, failure_count: 0, failures: Vec::new(), skipped: Vec::new() };
    (suite.run)(bounds, &mut sweep)?;
    Ok(SweepReport {
        suite: id.to_string(),
        bounds: bounds.clone(),
        cases: sweep.cases,
        failure_count: sweep.failure_count,
        failures: sweep.failures,
        skipped: sweep.skipped,
    })
}

fn theories(b: &Bounds, default: &[Theory]) -> Vec<Theory> {
    b.theory.map_or_else(|| default.to_vec(), |t| vec![t])
}

fn meet_sigma() -> Theory {
    Theory::MEET.with(Symbol::Sigma)
}

/// The theories over which decomposition cubes are swept.
pub fn n_suite_theories() -> Vec<Theory> {
    vec![
        Theory::MEET,
        meet_sigma(),
        meet_sigma().with(Symbol::Delta),
        Theory::POSET,
        Theory::MEET_JOIN.with(Symbol::Rho),
    ]
}

/// Theories over which factorization is swept.
pub fn factorization_theories() -> Vec<Theory> {
    vec![Theory::EMPTY, Theory::MEET, Theory::MEET_JOIN, meet_sigma(), Theory::POSET]
}

fn id(n: usize) -> CubeMap {
    CubeMap::identity(n)
}

fn ones(n: usize) -> u32 {
    (1u32 << n) - 1
}

// ---------------------------------------------------------------- cube_theory

fn cubical_identities(b: &Bounds, s: &mut Sweep) -> Result<()> {
    for n in 1..=b.max_dim {
        for i in 1..=n {
            for e in 0..=1u8 {
                let f = face(n, i, e);
                let lhs = projection(n - 1, i).after(&f)?;
                s.check(lhs.is_identity(), || format!("σ_{i} ∂_{{{i},{e}}} = id"), &[n], &[&lhs]);
            }
        }
        if n < 2 {
            continue;
        }
        for i in 1..n {
            for e in 0..=1u8 {
                let g = connection(n - 1, i, e);
                for fi in [i, i + 1] {
                    let lhs = g.after(&face(n, fi, e))?;
                    s.check(lhs.is_identity(), || format!("γ_{{{i},{e}}} ∂_{{{fi},{e}}} = id"), &[n], &[&lhs]);
                }
                let rhs = face(n - 1, i, 1 - e).after(&projection(n - 2, i))?;
                for fi in [i, i + 1] {
                    let lhs = g.after(&face(n, fi, 1 - e))?;
                    s.check(
                        lhs == rhs,
                        || format!("γ_{{{i},{e}}} ∂_{{{fi},{}}} = ∂_{{{i},{}}} σ_{i}", 1 - e, 1 - e),
                        &[n],
                        &[&lhs, &rhs],
                    );
                }
            }
        }
    }
    Ok(())
}

/// Coordinate functions `{0,1}^m → {0,1}` as truth tables, brute force.
fn boolean_functions(m: usize) -> Vec<Vec<u8>> {
    let rows = 1usize << m;
    (0u64..1 << rows).map(|f| (0..rows).map(|v| ((f >> v) & 1) as u8).collect()).collect()
}

fn is_monotone_by_pairs(f: &CubeMap) -> bool {
    let m = f.dom();
    (0u32..1 << m).all(|u| (0u32..1 << m).all(|v| u & v != u || f.apply(u) & f.apply(v) == f.apply(u)))
}

fn sorted_tables(maps: &[CubeMap]) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = maps.iter().map(|f| f.table().to_vec()).collect();
    v.sort();
    v
}

/// Function-space size `2^(n·2^m)` above which a hom-set is not enumerated.
const MAX_FUNCTION_SPACE_BITS: usize = 20;

fn hom(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let known = [(Theory::EMPTY, 1, 1, 3usize), (Theory::POSET, 2, 1, 6)];
    for (t, m, n, count) in known {
        s.theory = Some(t);
        let got = enumerate_hom_closure(t, m, n)?.len();
        s.check(got == count, || format!("|hom({m},{n})| = {count}, got {got}"), &[m, n], &[]);
        let got = enumerate_hom(t, m, n)?.len();
        s.check(got == count, || format!("|hom({m},{n})| = {count}, got {got}"), &[m, n], &[]);
    }
    for t in theories(b, &Theory::all()) {
        s.theory = Some(t);
        // Diagonals without symmetries need intermediate codomains of
        // dimension max(m, n)^2 + 1, beyond the enumeration cap from 3 on.
        let top = if t.contains(Symbol::Delta) && !t.contains(Symbol::Sigma) && t != Theory::FULL {
            if b.max_dim > 2 {
                s.skip(format!("{t}: dimensions above 2, closure exceeds the enumeration cap"));
            }
            b.max_dim.min(2)
        } else {
            b.max_dim
        };
        for m in 0..=top {
            for n in 0..=top {
                if n << m > MAX_FUNCTION_SPACE_BITS && t == Theory::FULL {
                    s.skip(format!("{t} {m}→{n}: function space of 2^{} maps", n << m));
                    continue;
                }
                let pair = enumerate_hom(t, m, n).and_then(|f| Ok((f, enumerate_hom_closure(t, m, n)?)));
                let (fast, closure) = match pair {
                    Ok(p) => p,
                    Err(Error::BoundsExceeded(why)) => {
                        s.skip(format!("{t} {m}→{n}: {why}"));
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                s.check(
                    sorted_tables(fast.maps()) == sorted_tables(closure.maps()),
                    || format!("fast path agrees with closure at {m}→{n}"),
                    &[m, n],
                    &[],
                );
                if m == 0 {
                    s.check(fast.len() == 1 << n, || "2^n vertices".into(), &[m, n], &[]);
                }
                if t == Theory::FULL {
                    let all = boolean_functions(m).len().pow(n as u32);
                    s.check(fast.len() == all, || format!("all {all} functions"), &[m, n], &[]);
                }
                if t == Theory::POSET {
                    let mono = boolean_functions(m)
                        .into_iter()
                        .filter(|col| {
                            let f = CubeMap::from_fn(m, 1, |v| col[v as usize] as u32);
                            is_monotone_by_pairs(&f)
                        })
                        .count();
                    let want = mono.pow(n as u32);
                    s.check(fast.len() == want, || format!("{want} monotone maps"), &[m, n], &[]);
                    for f in fast.maps() {
                        s.check(is_monotone_by_pairs(f), || "member is monotone".into(), &[m, n], &[f]);
                    }
                }
            }
        }
        for g in (0..=top).flat_map(|d| generators_from(t, d)).filter(|g| g.cod() <= top) {
            let ok = match enumerate_hom(t, g.dom(), g.cod()) {
                Ok(h) => h.contains(&g),
                Err(Error::BoundsExceeded(_)) => continue,
                Err(e) => return Err(e),
            };
            s.check(ok, || "generator is a member".into(), &[g.dom(), g.cod()], &[&g]);
        }
        let top = top.min(2);
        for m in 0..=top {
            for n in 0..=top {
                for p in 0..=top {
                    let sets = enumerate_hom(t, m, n)
                        .and_then(|f| Ok((f, enumerate_hom(t, n, p)?, enumerate_hom(t, m, p)?)));
                    let (fs, gs, target) = match sets {
                        Ok(x) => x,
                        Err(Error::BoundsExceeded(why)) => {
                            s.skip(format!("{t} {m}→{n}→{p}: {why}"));
                            continue;
                        }
                        Err(e) => return Err(e),
                    };
                    let mut ok = true;
                    let mut witness = None;
                    'outer: for f in fs.maps() {
                        for g in gs.maps() {
                            if !target.contains(&g.after(f)?) {
                                ok = false;
                                witness = Some((f.clone(), g.clone()));
                                break 'outer;
                            }
                        }
                    }
                    let maps: Vec<CubeMap> = witness.map(|(f, g)| vec![f, g]).unwrap_or_default();
                    let refs: Vec<&CubeMap> = maps.iter().collect();
                    s.check(ok, || format!("closed under composition {m}→{n}→{p}"), &[m, n, p], &refs);
                }
            }
        }
    }
    Ok(())
}

/// Whether `f` fixes no coordinate, read coordinate by coordinate.
fn fixes_nothing(f: &CubeMap) -> bool {
    let (m, n) = (f.dom(), f.cod());
    (1..=n).all(|i| {
        let vals: HashSet<u8> = (0u32..1 << m).map(|v| coord(f.apply(v), n, i)).collect();
        vals.len() == 2
    })
}

fn factorization(b: &Bounds, s: &mut Sweep) -> Result<()> {
    for t in theories(b, &factorization_theories()) {
        s.theory = Some(t);
        for n in 0..=b.max_dim {
            // Every face composite into ◻^n with its vertex inverse.
            let mut candidates = Vec::new();
            for p in 0..=n {
                for kappa in FaceList::all(n, p) {
                    let km = kappa.to_map();
                    let mut inv = vec![None; 1 << n];
                    for v in 0..1u32 << p {
                        inv[km.apply(v) as usize] = Some(v);
                    }
                    candidates.push((kappa, inv));
                }
            }
            for m in 0..=b.max_dim {
                for f in enumerate_hom(t, m, n)?.maps() {
                    let (kappa, psi) = active_face_factor(f);
                    let round = kappa.to_map().after(&psi)?;
                    s.check(&round == f, || "κ ψ = f".into(), &[m, n], &[f, &psi]);
                    let decreasing = kappa.entries().windows(2).all(|w| w[0].0 > w[1].0);
                    s.check(decreasing && fixes_nothing(&psi), || "κ decreasing, ψ active".into(), &[m, n], &[f, &psi]);
                    s.check(is_member(t, &psi)?, || "ψ lies in the theory".into(), &[m, n], &[f, &psi]);
                    let mut found = 0;
                    let mut agrees = false;
                    for (k2, inv) in &candidates {
                        let table: Option<Vec<u32>> = f.table().iter().map(|&w| inv[w as usize]).collect();
                        let Some(table) = table else { continue };
                        let psi2 = CubeMap::new(m, k2.source(), table)?;
                        if fixes_nothing(&psi2) {
                            found += 1;
                            agrees |= *k2 == kappa && psi2 == psi;
                        }
                    }
                    s.check(
                        found == 1 && agrees,
                        || format!("unique factorization, {found} found"),
                        &[m, n],
                        &[f],
                    );
                }
            }
        }
    }
    Ok(())
}

fn active_poset(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let t = Theory::POSET;
    s.theory = Some(t);
    for m in 0..=b.max_dim {
        for n in 0..=b.max_dim {
            for f in enumerate_hom(t, m, n)?.maps() {
                let bottom = f.apply(0);
                let top = f.apply(ones(m));
                let endpoints = bottom == 0 && top == ones(n);
                s.check(is_active(f) == endpoints, || "active iff endpoints preserved".into(), &[m, n], &[f]);
                let want: Vec<(usize, u8)> = (1..=n)
                    .filter_map(|i| {
                        if coord(top, n, i) == 0 {
                            Some((i, 0))
                        } else if coord(bottom, n, i) == 1 {
                            Some((i, 1))
                        } else {
                            None
                        }
                    })
                    .collect();
                s.check(fixed_coordinates(f) == want, || "fixed coordinates by endpoints".into(), &[m, n], &[f]);
            }
        }
    }
    Ok(())
}

/// Tables of every composite `d ∘ g` with `g` in the theory.
fn factor_set(t: Theory, d: &CubeMap, m: usize) -> Result<HashSet<Vec<u32>>> {
    let mut out = HashSet::new();
    for g in enumerate_hom(t, m, d.dom())?.maps() {
        out.insert(d.after(g)?.table().to_vec());
    }
    Ok(out)
}

fn face_pullback(b: &Bounds, s: &mut Sweep) -> Result<()> {
    for t in theories(b, &[Theory::EMPTY, Theory::MEET_JOIN, Theory::POSET]) {
        s.theory = Some(t);
        for n in 2..=b.max_dim {
            for m in 0..=b.max_dim {
                let maps = enumerate_hom(t, m, n)?;
                for i in 1..n {
                    for j in i + 1..=n {
                        for e in 0..=1u8 {
                            for e2 in 0..=1u8 {
                                let c1 = face(n, j, e2).after(&face(n - 1, i, e))?;
                                let c2 = face(n, i, e).after(&face(n - 1, j - 1, e2))?;
                                s.check(c1 == c2, || format!("∂_{j}∂_{i} = ∂_{i}∂_{}", j - 1), &[n], &[&c1, &c2]);
                                let fi = factor_set(t, &face(n, i, e), m)?;
                                let fj = factor_set(t, &face(n, j, e2), m)?;
                                let fij = factor_set(t, &c1, m)?;
                                for f in maps.maps() {
                                    let tab = f.table().to_vec();
                                    let both = fi.contains(&tab) && fj.contains(&tab);
                                    s.check(
                                        both == fij.contains(&tab),
                                        || format!("pullback of ∂_{{{i},{e}}} and ∂_{{{j},{e2}}}"),
                                        &[m, n],
                                        &[f],
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Pair count above which a tensor-faithfulness block is not enumerated.
const MAX_TENSOR_PAIRS: usize = 1 << 20;

fn tensor_faithful(b: &Bounds, s: &mut Sweep) -> Result<()> {
    for t in theories(b, &[Theory::FULL]) {
        s.theory = Some(t);
        let d = b.max_dim;
        for m in 0..=d {
            for n in 0..=d {
                if t == Theory::FULL && n << m > MAX_FUNCTION_SPACE_BITS {
                    continue;
                }
                let fs = enumerate_hom(t, m, n)?;
                for p in 0..=d {
                    for q in 0..=d {
                        if t == Theory::FULL && q << p > MAX_FUNCTION_SPACE_BITS {
                            continue;
                        }
                        let gs = enumerate_hom(t, p, q)?;
                        if fs.len() * gs.len() > MAX_TENSOR_PAIRS {
                            s.skip(format!("{t} ({m}→{n}) ⊗ ({p}→{q}): {} pairs", fs.len() * gs.len()));
                            continue;
                        }
                        let mut seen: HashMap<Vec<u32>, (usize, usize)> = HashMap::new();
                        for (a, f) in fs.maps().iter().enumerate() {
                            for (c, g) in gs.maps().iter().enumerate() {
                                let h = f.tensor(g);
                                let prev = seen.insert(h.table().to_vec(), (a, c));
                                let maps: Vec<&CubeMap> = match prev {
                                    Some((a2, c2)) => vec![f, g, fs.get(a2), gs.get(c2)],
                                    None => Vec::new(),
                                };
                                s.check(prev.is_none(), || "f ⊗ g determines f and g".into(), &[m, n, p, q], &maps);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn is_degenerate_map(f: &CubeMap) -> bool {
    !active_face_factor(f).1.is_identity()
}

/// The one-face property on a constructed set: for every degenerate cube and
/// every non-degenerate cube one dimension down, the number of faces of the
/// former equal to the latter is not one.
fn degen_one_face_in(x: &CubicalSet, name: &str, s: &mut Sweep) -> Result<()> {
    for d in 1..=x.truncation() {
        let nondeg: HashSet<usize> = x.nondegenerate(d - 1)?.into_iter().collect();
        for c in 0..x.count(d) {
            if !x.is_degenerate(d, c)? {
                continue;
            }
            let mut hits: HashMap<usize, usize> = HashMap::new();
            for i in 1..=d {
                for e in 0..=1u8 {
                    *hits.entry(x.act(d, c, &face(d, i, e))?).or_default() += 1;
                }
            }
            for (y, count) in hits {
                if nondeg.contains(&y) {
                    s.check(count != 1, || format!("{name}: cube {c} in dim {d} meets {y} once"), &[d], &[]);
                }
            }
        }
    }
    Ok(())
}

fn degen_one_face(b: &Bounds, s: &mut Sweep) -> Result<()> {
    for t in theories(b, &[Theory::MEET, Theory::MEET_JOIN]) {
        if !t.is_ez() {
            s.skip(format!("{t}: degeneracies need a theory inside {{∧,∨}}"));
            continue;
        }
        s.theory = Some(t);
        let dm = b.max_dim;
        for big_n in 0..=dm {
            for m in 1..=dm {
                for x in enumerate_hom(t, m, big_n)?.maps() {
                    if !is_degenerate_map(x) {
                        continue;
                    }
                    let mut hits: HashMap<Vec<u32>, (usize, CubeMap)> = HashMap::new();
                    for i in 1..=m {
                        for e in 0..=1u8 {
                            let y = x.after(&face(m, i, e))?;
                            hits.entry(y.table().to_vec()).or_insert((0, y)).0 += 1;
                        }
                    }
                    for (count, y) in hits.values() {
                        if !is_degenerate_map(y) {
                            s.check(*count != 1, || "exactly one face hits a non-degenerate cube".into(), &[m, big_n], &[x, y]);
                        }
                    }
                }
            }
        }
        let d = dm;
        let i = representable(t, 1, d)?;
        degen_one_face_in(&boundary(t, 2, d)?.to_set()?.0, "∂◻^2", s)?;
        if d >= 3 {
            degen_one_face_in(&boundary(t, 3, d)?.to_set()?.0, "∂◻^3", s)?;
        }
        degen_one_face_in(&open_box(t, 2, 1, 1, d)?.to_set()?.0, "⊓^2_{1,1}", s)?;
        degen_one_face_in(&cartesian_product(&i, &i)?.set, "◻^1 × ◻^1", s)?;
        degen_one_face_in(&geometric_product(&i, &i)?.set, "◻^1 ⊗ ◻^1", s)?;
    }
    Ok(())
}

fn long_diagonals(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let t = b.theory.unwrap_or(Theory::FULL);
    s.theory = Some(t);
    for m in 0..=b.max_dim {
        for n in 0..=b.max_dim {
            for phi in enumerate_hom(t, m, n)?.maps() {
                let lhs = long_diagonal(n).after(phi)?;
                let rhs = phi.tensor(phi).after(&long_diagonal(m))?;
                s.check(lhs == rhs, || "D_n φ = (φ ⊗ φ) D_m".into(), &[m, n], &[phi]);
            }
            let r = last_deletion(m, n).tensor(&front_deletion(m, n)).after(&long_diagonal(m + n))?;
            s.check(r.is_identity(), || "(σ^L ⊗ σ^F) D = id".into(), &[m, n], &[&r]);
        }
    }
    Ok(())
}

// -------------------------------------------------------------- decomposition

/// Every `φ: ◻^m → ◻^n` in each theory with `m ≤ max_dim`, `1 ≤ n ≤ max_dim`.
fn each_phi(
    b: &Bounds,
    s: &mut Sweep,
    mut body: impl FnMut(Theory, &CubeMap, &mut Sweep) -> Result<()>,
) -> Result<()> {
    for t in theories(b, &n_suite_theories()) {
        s.theory = Some(t);
        for m in 0..=b.max_dim {
            for n in 1..=b.max_dim {
                for phi in enumerate_hom(t, m, n)?.maps() {
                    body(t, phi, s)?;
                }
            }
        }
    }
    Ok(())
}

fn n_explicit(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let fl = b.flavor;
    each_phi(b, s, |_, phi, s| {
        for k in 0..=b.max_k {
            let closed = standard_decomposition(phi, k, fl)?;
            let composite = standard_decomposition_composite(phi, k, fl)?;
            s.check(closed == composite, || format!("closed form = composite, k = {k}"), &[phi.dom(), phi.cod(), k], &[phi]);
        }
        Ok(())
    })
}

fn n_identities(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let fl = b.flavor;
    let side = fl.side();
    each_phi(b, s, |t, phi, s| {
        let (m, n) = (phi.dom(), phi.cod());
        for k in 0..=b.max_k {
            let nk = standard_decomposition(phi, k, fl)?;
            let dims = [m, n, k];
            for i in 1..=m + 1 {
                let lhs = standard_decomposition(&phi.after(&projection(m, i))?, k, fl)?;
                let rhs = nk.after(&projection(m + 1 + k, i))?;
                s.check(lhs == rhs, || format!("(1) N_k(φσ_{i}) = N_k(φ)σ_{i}, k = {k}"), &dims, &[phi]);
            }
            for i in 1..=m {
                for e in 0..=1u8 {
                    let admitted = t.contains(if e == 1 { Symbol::Meet } else { Symbol::Join });
                    if !admitted || m < 1 {
                        continue;
                    }
                    let lhs = standard_decomposition(&phi.after(&connection(m, i, e))?, k, fl)?;
                    let rhs = nk.after(&connection(m + 1 + k, i, e))?;
                    s.check(lhs == rhs, || format!("(2) N_k(φγ_{{{i},{e}}}) = N_k(φ)γ_{{{i},{e}}}, k = {k}"), &dims, &[phi]);
                }
            }
            for i in 1..=n {
                for e in 0..=1u8 {
                    let lhs = standard_decomposition(&face(n + 1, i, e).after(phi)?, k, fl)?;
                    let rhs = face(n + 1 + k, i, e).after(&nk)?;
                    s.check(lhs == rhs, || format!("(3) N_k(∂_{{{i},{e}}}φ) = ∂_{{{i},{e}}}N_k(φ), k = {k}"), &dims, &[phi]);
                }
            }
            let spread = phi.tensor(&id(1)).tensor(&id(k));
            let lhs = standard_decomposition(&face(n + 1, n + 1, 1 - side).after(phi)?, k, fl)?;
            let rhs = face(n + 1 + k, n + 1, 1 - side).after(&projection(n + k, n + 1))?.after(&spread)?;
            s.check(
                lhs == rhs,
                || format!("(4) N_k(∂_{{n+1,{}}}φ) = ∂_{{n+1,{}}}σ_{{n+1}}(φ ⊗ ◻^1 ⊗ ◻^k), k = {k}", 1 - side, 1 - side),
                &dims,
                &[phi],
            );
            let lhs = standard_decomposition(&face(n + 1, n + 1, side).after(phi)?, k, fl)?;
            s.check(lhs == spread, || format!("(5) N_k(∂_{{n+1,{side}}}φ) = φ ⊗ ◻^1 ⊗ ◻^k, k = {k}"), &dims, &[phi]);
        }
        Ok(())
    })
}

fn n_faces(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let fl = b.flavor;
    let side = fl.side();
    each_phi(b, s, |t, phi, s| {
        let (m, n) = (phi.dom(), phi.cod());
        for k in 0..=b.max_k {
            let nk = standard_decomposition(phi, k, fl)?;
            let top = m + 1 + k;
            let dims = [m, n, k];
            for i in 1..=m {
                for e in 0..=1u8 {
                    let f = nk.after(&face(top, i, e))?;
                    let via = standard_decomposition(&phi.after(&face(m, i, e))?, k, fl)?;
                    s.check(f == via, || format!("N_k(φ)∂_{{{i},{e}}} = N_k(φ∂_{{{i},{e}}})"), &dims, &[phi]);
                    let boundary_case = !fixed_coordinates(&f).is_empty();
                    let tensor_case = match split_tail(&f, k + 1) {
                        Some(psi) => psi.dom() + 1 == m && psi.cod() + 1 == n && is_active(&psi) && is_member(t, &psi)?,
                        None => false,
                    };
                    // The only candidate ψ with N_k(ψ) = f is read off the face
                    // where the merged coordinate equals the flavor side.
                    let psi = CubeMap::from_fn(m - 1, n, |a| f.apply(((a << 1) | side as u32) << k) >> k);
                    let n_case = is_active(&psi) && is_member(t, &psi)? && standard_decomposition(&psi, k, fl)? == f;
                    let hits = [boundary_case, tensor_case, n_case].iter().filter(|&&c| c).count();
                    s.check(hits == 1, || format!("face ({i},{e}) in exactly one case, {hits} matched"), &dims, &[phi, &f]);
                }
            }
            let phik = phi.tensor(&id(k));
            let f0 = nk.after(&face(top, m + 1, 1 - side))?;
            let want0 = face(n + k, n, 1 - side).after(&projection(n + k - 1, n))?.after(&phik)?;
            s.check(f0 == want0, || format!("face (m+1,{}) = ∂_{{n,{}}}σ_n(φ ⊗ ◻^k)", 1 - side, 1 - side), &dims, &[phi]);
            let f1 = nk.after(&face(top, m + 1, side))?;
            s.check(f1 == phik, || format!("face (m+1,{side}) = φ ⊗ ◻^k"), &dims, &[phi]);
            if k >= 1 {
                let lower = standard_decomposition(phi, k - 1, fl)?;
                for p in 1..=k {
                    for e in 0..=1u8 {
                        let f = nk.after(&face(top, m + 1 + p, e))?;
                        let want = face(n + k, n + p, e).after(&lower)?;
                        s.check(f == want, || format!("face (m+1+{p},{e}) = ∂_{{n+{p},{e}}}N_{{k-1}}(φ)"), &dims, &[phi]);
                    }
                }
            }
        }
        Ok(())
    })
}

fn n_active(b: &Bounds, s: &mut Sweep) -> Result<()> {
    each_phi(b, s, |_, phi, s| {
        if !is_active(phi) {
            return Ok(());
        }
        for k in 0..=b.max_k {
            let nk = standard_decomposition(phi, k, b.flavor)?;
            s.check(is_active(&nk), || format!("N_{k}(φ) active"), &[phi.dom(), phi.cod(), k], &[phi]);
        }
        Ok(())
    })
}

fn n_k_tensor(b: &Bounds, s: &mut Sweep) -> Result<()> {
    each_phi(b, s, |_, phi, s| {
        for j in 0..=b.max_k {
            for k in 0..=b.max_k - j {
                let lhs = standard_decomposition(phi, j + k, b.flavor)?;
                let rhs = standard_decomposition(phi, j, b.flavor)?.tensor(&id(k));
                s.check(lhs == rhs, || format!("N_{{{j}+{k}}} = N_{j} ⊗ ◻^{k}"), &[phi.dom(), phi.cod(), j, k], &[phi]);
            }
        }
        Ok(())
    })
}

fn n_tail_length(b: &Bounds, s: &mut Sweep) -> Result<()> {
    each_phi(b, s, |_, phi, s| {
        if !is_active(phi) {
            return Ok(());
        }
        for k in 0..=b.max_k {
            let nk = standard_decomposition(phi, k, b.flavor)?;
            let ok = tail_length(&nk) == k && stats(&nk).tail_length == k;
            s.check(ok, || format!("tail length of N_{k}(φ) is {k}"), &[phi.dom(), phi.cod(), k], &[phi]);
        }
        Ok(())
    })
}

fn n_right_tensor(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let fl = b.flavor;
    let side = fl.side();
    each_phi(b, s, |_, phi, s| {
        let m = phi.dom();
        let n0 = standard_decomposition(phi, 0, fl)?;
        for k in 0..=b.max_k {
            let gamma = connection(m + 1 + k, m + 1, side);
            let lhs = standard_decomposition(&phi.tensor(&id(1)), k, fl)?;
            let rhs = phi.tensor(&id(1)).tensor(&id(k)).after(&gamma)?;
            s.check(lhs == rhs, || format!("N_{k}(φ ⊗ ◻^1) = (φ ⊗ ◻^1 ⊗ ◻^{k})γ_{{m+1}}"), &[m, phi.cod(), k], &[phi]);
            let lhs = standard_decomposition(&n0, k, fl)?;
            let rhs = n0.tensor(&id(k)).after(&gamma)?;
            s.check(lhs == rhs, || format!("N_{k}(N_0 φ) = (N_0 φ ⊗ ◻^{k})γ_{{m+1}}"), &[m, phi.cod(), k], &[phi]);
        }
        Ok(())
    })
}

fn n_crit_edge(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let side = b.flavor.side();
    let mut skipped = HashSet::new();
    each_phi(b, s, |t, phi, s| {
        if !t.is_subtheory_of(Theory::POSET) {
            if skipped.insert(t) {
                s.skip(format!("{t}: not inside P"));
            }
            return Ok(());
        }
        if !is_active(phi) {
            return Ok(());
        }
        let m = phi.dom();
        for k in 0..=b.max_k {
            let nk = standard_decomposition(phi, k, b.flavor)?;
            let edge = nk.after(&critical_edge(m + 1 + k, m + 1, side)?)?;
            let t0 = edge.table();
            s.check(t0[0] == t0[1], || format!("critical edge of N_{k}(φ) is constant"), &[m, phi.cod(), k], &[phi]);
        }
        Ok(())
    })
}

// --------------------------------------------------------------- cubical_set

fn functoriality(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let d = b.max_dim;
    for t in theories(b, &factorization_theories()) {
        s.theory = Some(t);
        for n in 0..=2 {
            let rep = representable(t, n, d)?;
            s.check_result(rep.check_functoriality(d), &format!("◻^{n}"));
        }
        let bd = boundary(t, 2, d)?.to_set()?;
        s.check_result(bd.0.check_functoriality(d), "∂◻^2");
        s.check_result(bd.1.check_naturality(d), "∂◻^2 ↪ ◻^2");
        let ob = open_box(t, 2, 1, 0, d)?.to_set()?;
        s.check_result(ob.0.check_functoriality(d), "⊓^2_{1,0}");
        s.check_result(ob.1.check_naturality(d), "⊓^2_{1,0} ↪ ◻^2");
        let i = representable(t, 1, d)?;
        let c = cartesian_product(&i, &i)?;
        s.check_result(c.set.check_functoriality(d), "◻^1 × ◻^1");
        s.check_result(c.proj_left.check_naturality(d), "π_1");
        s.check_result(c.proj_right.check_naturality(d), "π_2");
        let g = if t.contains(Symbol::Delta) { geometric_product_bounded(&i, &i, 2)? } else { geometric_product(&i, &i)? };
        s.check_result(g.set.check_functoriality(d), "◻^1 ⊗ ◻^1");
        if t.is_ez() {
            let ext = left_extend(&bd.0, Theory::POSET)?;
            s.check_result(ext.set.check_functoriality(d), "i_! ∂◻^2");
            s.check_result(ext.unit.check_naturality(d), "unit of i_! ∂◻^2");
        }
    }
    Ok(())
}

/// The comparison `◻^m ⊗ ◻^n → ◻^{m+n}`, `(x ⊗ y)φ ↦ (x ⊗ y) ∘ φ`.
fn tensor_of_representables(g: &crate::cubical_set::GeometricProduct, rep: &Arc<CubicalSet>) -> Result<CSMap> {
    let mut comps = Vec::new();
    for k in 0..=g.set.truncation() {
        let mut row = Vec::with_capacity(g.set.count(k));
        for c in 0..g.set.count(k) {
            let ((dx, x), (dy, y), phi) = g.representative(k, c);
            let fx = cube_map(&g.left, dx, x).ok_or_else(|| Error::Inconsistent("left factor is not representable".into()))?;
            let fy = cube_map(&g.right, dy, y).ok_or_else(|| Error::Inconsistent("right factor is not representable".into()))?;
            row.push(rep.find_map(k, &fx.tensor(fy).after(phi)?)?);
        }
        comps.push(row);
    }
    CSMap::new(g.set.clone(), rep.clone(), comps)
}

fn geometric_representables(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let d = b.max_dim;
    for t in theories(b, &[Theory::EMPTY, Theory::MEET, Theory::MEET_JOIN]) {
        s.theory = Some(t);
        for m in 0..=d {
            for n in 0..=d - m {
                let g = geometric_product(&representable(t, m, d)?, &representable(t, n, d)?)?;
                let rep = representable(t, m + n, d)?;
                let f = tensor_of_representables(&g, &rep)?;
                s.check(g.set.counts() == rep.counts(), || format!("◻^{m} ⊗ ◻^{n} cube counts"), &[m, n], &[]);
                s.check(f.is_bijective(), || format!("◻^{m} ⊗ ◻^{n} ≅ ◻^{}", m + n), &[m, n], &[]);
                s.check_result(f.check_naturality(d.min(2)), &format!("◻^{m} ⊗ ◻^{n} → ◻^{}", m + n));
            }
        }
        let bd = boundary(t, 2, d)?.to_set()?.0;
        let g = geometric_product(&bd, &representable(t, 0, d)?)?;
        let mut comps = Vec::new();
        for k in 0..=d {
            let row: Vec<usize> = (0..g.set.count(k))
                .map(|c| {
                    let ((dx, x), _, phi) = g.representative(k, c);
                    bd.act(dx, x, phi)
                })
                .collect::<Result<_>>()?;
            comps.push(row);
        }
        let f = CSMap::new(g.set.clone(), bd.clone(), comps)?;
        s.check(f.is_bijective(), || "∂◻^2 ⊗ ◻^0 ≅ ∂◻^2".into(), &[2, 0], &[]);
        s.check_result(f.check_naturality(d.min(2)), "∂◻^2 ⊗ ◻^0 → ∂◻^2");
    }
    Ok(())
}

fn boundary_gluing(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let d = b.max_dim;
    for t in theories(b, &[Theory::EMPTY, Theory::MEET, Theory::MEET_JOIN]) {
        s.theory = Some(t);
        for n in 2..=d.clamp(2, 3) {
            let g = boundary_by_gluing(t, n, d)?;
            let union = boundary(t, n, d)?;
            s.check(g.well_defined, || format!("gluing of ∂◻^{n} is well defined"), &[n], &[]);
            s.check(g.comparison.is_bijective(), || format!("gluing ≅ ∂◻^{n}"), &[n], &[]);
            s.check_result(g.comparison.check_naturality(d.min(2)), &format!("gluing → ∂◻^{n}"));
            s.check(g.set.counts() == union.counts(), || format!("∂◻^{n} cube counts"), &[n], &[]);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- comparison

fn members(sub: &Subcomplex) -> Vec<Vec<bool>> {
    let amb = sub.ambient();
    (0..=amb.truncation()).map(|d| (0..amb.count(d)).map(|x| sub.contains(d, x)).collect()).collect()
}

/// Image of `i_!(S ⊆ ◻^n_A)` inside `◻^n_B`.
fn extended_image(sub: &Subcomplex, n: usize, b: Theory) -> Result<(Vec<Vec<bool>>, CSMap)> {
    let d = sub.ambient().truncation();
    let (set, incl) = sub.to_set()?;
    let ext_s = left_extend(&set, b)?;
    let ext_rep = left_extend(sub.ambient(), b)?;
    let rep = representable(b, n, d)?;
    let f = left_extend_map(&incl, &ext_s, &ext_rep)?;
    let total = f.then(&evaluate_into_representable(&ext_rep, &rep)?)?;
    let mut img = Vec::new();
    for dd in 0..=d {
        let mut row = vec![false; rep.count(dd)];
        for &y in &total.components[dd] {
            row[y] = true;
        }
        img.push(row);
    }
    Ok((img, f))
}

fn kan_extension(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let d = b.max_dim;
    let a = Theory::MEET;
    for bt in theories(b, &[meet_sigma(), Theory::POSET]) {
        s.theory = Some(bt);
        for n in 0..=2 {
            let ext = left_extend(&representable(a, n, d)?, bt)?;
            let rep = representable(bt, n, d)?;
            let ev = evaluate_into_representable(&ext, &rep)?;
            s.check(ev.is_bijective(), || format!("i_! ◻^{n} ≅ ◻^{n}"), &[n], &[]);
            s.check_result(ev.check_naturality(d.min(2)), &format!("i_! ◻^{n} → ◻^{n}"));
        }
        let bd = boundary(a, 2, d)?;
        for (name, x) in [("◻^2", representable(a, 2, d)?), ("∂◻^2", bd.to_set()?.0)] {
            let ext = left_extend(&x, bt)?;
            s.check(ext.unit.is_injective(), || format!("unit of {name} is injective"), &[2], &[]);
            s.check_result(ext.unit.check_naturality(d.min(2)), &format!("unit of {name}"));
        }
        let (img, f) = extended_image(&bd, 2, bt)?;
        s.check(f.is_injective(), || "i_! ∂◻^2 → i_! ◻^2 injective".into(), &[2], &[]);
        s.check(img == members(&boundary(bt, 2, d)?), || "i_! ∂◻^2 = ∂◻^2_B".into(), &[2], &[]);
        for i in 1..=2 {
            for e in 0..=1u8 {
                let (img, f) = extended_image(&open_box(a, 2, i, e, d)?, 2, bt)?;
                s.check(f.is_injective(), || format!("i_! ⊓^2_{{{i},{e}}} injective"), &[2], &[]);
                let want = members(&open_box(bt, 2, i, e, d)?);
                s.check(img == want, || format!("i_! ⊓^2_{{{i},{e}}} = ⊓^2_B"), &[2], &[]);
            }
        }
    }
    Ok(())
}

fn product_comparison(b: &Bounds, s: &mut Sweep) -> Result<()> {
    let d = b.max_dim;
    let a = b.theory.unwrap_or(Theory::MEET);
    s.theory = Some(Theory::POSET);
    let i = representable(Theory::POSET, 1, d)?;
    // ◻^1 is generated by its 1-cube, so cells with p + q ≤ 2 suffice.
    let g = geometric_product_bounded(&i, &i, 2)?;
    let c = cartesian_product(&i, &i)?;
    let f = geo_to_cart(&g, &c)?;
    s.check(f.is_bijective(), || "◻^1 ⊗ ◻^1 ≅ ◻^1 × ◻^1 over P".into(), &[1, 1], &[]);
    s.check_result(f.check_naturality(d.min(2)), "◻^1 ⊗ ◻^1 → ◻^1 × ◻^1");

    s.theory = Some(a);
    let sets = [
        ("◻^0", representable(a, 0, d)?),
        ("◻^1", representable(a, 1, d)?),
        ("∂◻^2", boundary(a, 2, d)?.to_set()?.0),
    ];
    for (nx, x) in &sets {
        for (ny, y) in &sets {
            let cmp = ProductComparison::build(x, y, Theory::POSET)?;
            s.check(cmp.composite_is_unit()?, || format!("{nx} ⊗ {ny}: composite is the unit"), &[], &[]);
            s.check(cmp.cart_to_extended.is_injective(), || format!("{nx} × {ny} → i^* i_!: injective"), &[], &[]);
            s.check_result(cmp.cart_to_extended.check_naturality(d.min(2)), &format!("{nx} × {ny} → i^* i_!"));
        }
    }
    for (m, n) in [(1, 1), (2, 1)] {
        let direct = cartesian_image_direct(a, Theory::POSET, m, n, d)?;
        let piped = cartesian_image_pipeline(a, Theory::POSET, m, n, d)?;
        s.check(members(&direct) == members(&piped), || format!("cartesian image ({m},{n})"), &[m, n], &[]);
        let amb = direct.ambient();
        for dd in 0..=d {
            for x in 0..amb.count(dd) {
                let phi = cube_map(amb, dd, x).ok_or_else(|| Error::Inconsistent("ambient is not representable".into()))?;
                let member = cartesian_image_member(phi, m, n, a)?;
                s.check(member == direct.contains(dd, x), || format!("cartesian image member ({m},{n})"), &[m, n], &[phi]);
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------------- anodyne

/// The certificates whose existence and soundness are swept.
pub fn certificate_requests(truncation: usize) -> Vec<(String, CertifyRequest)> {
    use SubcomplexSpec::{Cartesian, Full, Unit};
    let req = |a, b, n, source, target| CertifyRequest {
        theory_a: a,
        theory_b: b,
        n,
        truncation,
        source,
        target,
        flavor: Flavor::Meet,
    };
    let mut out = Vec::new();
    for b in [meet_sigma(), Theory::POSET] {
        for n in 1..=2 {
            out.push((format!("unit ◻^{n} ⊆ full over {b}"), req(Theory::MEET, b, n, Unit, Full)));
        }
    }
    out.push(("unit ◻^2 ⊆ ◻^1 × ◻^1".into(), req(Theory::MEET, Theory::POSET, 2, Unit, Cartesian(1, 1))));
    out.push(("◻^1 × ◻^1 ⊆ full".into(), req(Theory::MEET, Theory::POSET, 2, Cartesian(1, 1), Full)));
    out
}

fn anodyne(b: &Bounds, s: &mut Sweep) -> Result<()> {
    for (name, r) in certificate_requests(b.max_dim) {
        s.theory = Some(r.theory_b);
        let cert = certify(&r)?.certificate;
        let report = verify(&cert);
        s.check(report.passed(), || format!("{name}: verify {:?}", report.failure), &[r.n], &[]);
        if r.theory_b.is_subtheory_of(Theory::POSET) {
            s.check(cert.all_inner, || format!("{name}: all fillings inner"), &[r.n], &[]);
        }
        if cert.steps.is_empty() {
            s.skip(format!("{name}: empty certificate, its header mutations describe other true inclusions"));
            continue;
        }
        for (what, m) in single_field_mutations(&cert) {
            s.check(!verify_json(&m.to_string()).passed(), || format!("{name}: mutation `{what}` accepted"), &[r.n], &[]);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run("nope", &default_bounds("hom").unwrap()).is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for id in ["cubical-identities", "n-identities", "n-faces", "long-diagonal"] {
            let mut b = default_bounds(id).unwrap();
            b.max_dim = 1;
            b.max_k = 1;
            let r = run(id, &b).unwrap();
            assert!(r.passed(), "{id}: {:?}", r.failures);
            assert!(r.cases > 0);
        }
    }
}
