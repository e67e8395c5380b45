use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use super::map::{generators_from, CubeMap};
use super::theory::{Symbol, Theory};
use crate::error::{Error, Result};

static HOM_CAP: AtomicUsize = AtomicUsize::new(4);

/// Largest hom-set that will be materialized.
pub const MAX_HOM_SIZE: usize = 4_000_000;

/// Largest domain dimension for coordinate-function closures (truth tables fit in a `u64`).
const MAX_CLONE_DIM: usize = 6;

/// Dimension bound for hom-set enumeration, default 4.
pub fn hom_cap() -> usize {
    HOM_CAP.load(Ordering::Relaxed)
}

pub fn set_hom_cap(cap: usize) {
    HOM_CAP.store(cap, Ordering::Relaxed);
}

/// The morphisms `◻^m → ◻^n` of a cube category, in canonical (table) order.
pub struct HomSet {
    theory: Theory,
    m: usize,
    n: usize,
    maps: Vec<CubeMap>,
    index: HashMap<CubeMap, usize>,
    active: OnceLock<Vec<usize>>,
}

impl HomSet {
    fn new(theory: Theory, m: usize, n: usize, mut maps: Vec<CubeMap>) -> HomSet {
        maps.sort();
        maps.dedup();
        let index = maps.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        HomSet { theory, m, n, maps, index, active: OnceLock::new() }
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[CubeMap] {
        &self.maps
    }

    pub fn get(&self, i: usize) -> &CubeMap {
        &self.maps[i]
    }

    pub fn index_of(&self, f: &CubeMap) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &CubeMap) -> bool {
        self.index.contains_key(f)
    }

    /// Indices of the active members.
    pub fn active_indices(&self) -> &[usize] {
        self.active.get_or_init(|| {
            (0..self.maps.len()).filter(|&i| super::factor::is_active(&self.maps[i])).collect()
        })
    }

    pub fn active(&self) -> impl Iterator<Item = &CubeMap> {
        self.active_indices().iter().map(|&i| &self.maps[i])
    }
}

impl std::fmt::Debug for HomSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HomSet({}, {}→{}, {} maps)", self.theory, self.m, self.n, self.maps.len())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Method {
    Default,
    Closure,
}

type Cell = Arc<OnceLock<Result<Arc<HomSet>>>>;

fn memo() -> &'static Mutex<HashMap<(Theory, usize, usize, Method), Cell>> {
    static MEMO: OnceLock<Mutex<HashMap<(Theory, usize, usize, Method), Cell>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn memoized(theory: Theory, m: usize, n: usize, method: Method) -> Result<Arc<HomSet>> {
    let has_fast_path = theory == Theory::FULL || theory == Theory::POSET;
    let method = if has_fast_path { method } else { Method::Closure };
    let cap = hom_cap();
    if m > cap || n > cap {
        return Err(Error::BoundsExceeded(format!("hom-set {m}→{n} exceeds cap {cap}")));
    }
    let cell = {
        let mut table = memo().lock().expect("hom memo poisoned");
        table.entry((theory, m, n, method)).or_default().clone()
    };
    cell.get_or_init(|| compute(theory, m, n, method).map(Arc::new)).clone()
}

/// All morphisms `◻^m_A → ◻^n_A`, memoized.
///
/// The full theory and `◻_P` use direct characterizations (all functions,
/// monotone functions); every other theory is computed by closing under
/// generators, see [`enumerate_hom_closure`].
pub fn enumerate_hom(theory: Theory, m: usize, n: usize) -> Result<Arc<HomSet>> {
    memoized(theory, m, n, Method::Default)
}

/// All morphisms `◻^m_A → ◻^n_A` by generator closure alone, never using the
/// direct characterizations.
///
/// Theories with both `Σ` and `δ` are cartesian: a map is a tuple of
/// coordinate functions, and the coordinate functions are the closure of
/// projections and constants under the operations named by the theory.
/// Other theories are handled by breadth-first post-composition with
/// generators starting from the identity, inside the function space of
/// codomains up to a dimension bound that suffices for the theory.
pub fn enumerate_hom_closure(theory: Theory, m: usize, n: usize) -> Result<Arc<HomSet>> {
    memoized(theory, m, n, Method::Closure)
}

fn compute(theory: Theory, m: usize, n: usize, method: Method) -> Result<HomSet> {
    let maps = match method {
        Method::Default if theory == Theory::FULL => tuples(&all_functions(m)?, m, n)?,
        Method::Default if theory == Theory::POSET => tuples(&monotone_functions(m)?, m, n)?,
        _ if is_cartesian(theory) => tuples(&coordinate_clone(theory, m)?, m, n)?,
        _ => bfs(theory, m, n)?,
    };
    Ok(HomSet::new(theory, m, n, maps))
}

fn is_cartesian(theory: Theory) -> bool {
    theory.contains(Symbol::Sigma) && theory.contains(Symbol::Delta)
}

fn full_mask(m: usize) -> u64 {
    if (1usize << m) == 64 {
        u64::MAX
    } else {
        (1u64 << (1usize << m)) - 1
    }
}

fn projection_table(m: usize, i: usize) -> u64 {
    (0..1u32 << m)
        .filter(|&v| super::map::coord(v, m, i) == 1)
        .fold(0u64, |acc, v| acc | (1u64 << v))
}

fn check_clone_dim(m: usize) -> Result<()> {
    if m > MAX_CLONE_DIM {
        return Err(Error::BoundsExceeded(format!("coordinate functions of {m} variables")));
    }
    Ok(())
}

fn all_functions(m: usize) -> Result<Vec<u64>> {
    check_clone_dim(m)?;
    let count = 1u128 << (1usize << m);
    if count > MAX_HOM_SIZE as u128 {
        return Err(Error::BoundsExceeded(format!("{count} functions of {m} variables")));
    }
    Ok((0..count as u64).collect())
}

fn monotone_functions(m: usize) -> Result<Vec<u64>> {
    check_clone_dim(m)?;
    if m > 4 {
        return Err(Error::BoundsExceeded(format!("monotone functions of {m} variables")));
    }
    let k = 1u32 << m;
    let mut out = Vec::new();
    for t in 0..1u64 << k {
        let mono = (0..k).all(|v| {
            (0..m).all(|b| {
                let w = v | (1 << b);
                (t >> v) & 1 <= (t >> w) & 1
            })
        });
        if mono {
            out.push(t);
        }
    }
    Ok(out)
}

/// Closure of the constants and projections under the binary and unary
/// operations the theory names.
fn coordinate_clone(theory: Theory, m: usize) -> Result<Vec<u64>> {
    check_clone_dim(m)?;
    let mask = full_mask(m);
    let mut set: HashSet<u64> = HashSet::new();
    set.insert(0);
    set.insert(mask);
    for i in 1..=m {
        set.insert(projection_table(m, i));
    }
    loop {
        let cur: Vec<u64> = set.iter().copied().collect();
        let before = set.len();
        for &f in &cur {
            if theory.contains(Symbol::Rho) {
                set.insert(!f & mask);
            }
            for &g in &cur {
                if theory.contains(Symbol::Meet) {
                    set.insert(f & g);
                }
                if theory.contains(Symbol::Join) {
                    set.insert(f | g);
                }
            }
            if set.len() > MAX_HOM_SIZE {
                return Err(Error::BoundsExceeded("coordinate clone".into()));
            }
        }
        if set.len() == before {
            break;
        }
    }
    let mut v: Vec<u64> = set.into_iter().collect();
    v.sort_unstable();
    Ok(v)
}

/// Every `n`-tuple of coordinate functions as a map.
fn tuples(funcs: &[u64], m: usize, n: usize) -> Result<Vec<CubeMap>> {
    let total = (funcs.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > MAX_HOM_SIZE as u128 {
        return Err(Error::BoundsExceeded(format!("{total} maps {m}→{n}")));
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; n];
    loop {
        out.push(CubeMap::from_fn(m, n, |v| {
            idx.iter().fold(0u32, |acc, &j| (acc << 1) | ((funcs[j] >> v) & 1) as u32)
        }));
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < funcs.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Codomain bound for the breadth-first closure. Without diagonals every
/// composite can be rearranged so that dimensions never exceed the larger
/// endpoint; with diagonals each output coordinate may need its own copy
/// of every input.
/// Largest intermediate codomain explored from `◻^m`. It depends on
/// `max(m, n)` only, so that composable hom-sets at equal size are computed
/// inside the same function space.
fn bfs_bound(theory: Theory, m: usize, n: usize) -> usize {
    let base = m.max(n);
    if theory.contains(Symbol::Delta) {
        base.max(base * base) + 1
    } else {
        base + 1
    }
}

fn bfs(theory: Theory, m: usize, n: usize) -> Result<Vec<CubeMap>> {
    let bound = bfs_bound(theory, m, n);
    let gens: Vec<Vec<CubeMap>> = (0..=bound)
        .map(|b| generators_from(theory, b).into_iter().filter(|g| g.cod() <= bound).collect())
        .collect();
    let mut seen: HashSet<CubeMap> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = CubeMap::identity(m);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(f) = queue.pop_front() {
        for g in &gens[f.cod()] {
            let h = g.after_unchecked(&f);
            if !seen.contains(&h) {
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
        if seen.len() > MAX_HOM_SIZE {
            return Err(Error::BoundsExceeded(format!("closure from dimension {m}")));
        }
    }
    Ok(seen.into_iter().filter(|f| f.cod() == n).collect())
}

fn clone_memo(theory: Theory, m: usize) -> Result<Arc<HashSet<u64>>> {
    type CloneCell = Arc<OnceLock<Result<Arc<HashSet<u64>>>>>;
    static MEMO: OnceLock<Mutex<HashMap<(Theory, usize), CloneCell>>> = OnceLock::new();
    let cell = {
        let mut t = MEMO.get_or_init(Default::default).lock().expect("clone memo poisoned");
        t.entry((theory, m)).or_default().clone()
    };
    cell.get_or_init(|| coordinate_clone(theory, m).map(|v| Arc::new(v.into_iter().collect())))
        .clone()
}

/// Whether `f` is a morphism of `◻_A`.
pub fn is_member(theory: Theory, f: &CubeMap) -> Result<bool> {
    if theory == Theory::FULL {
        return Ok(true);
    }
    if theory == Theory::POSET {
        return Ok(f.is_monotone());
    }
    // Faces lie in every theory and the active part of a member is a member.
    let (_, psi) = super::factor::active_face_factor(f);
    if psi.is_identity() {
        return Ok(true);
    }
    if is_cartesian(theory) && psi.dom() <= MAX_CLONE_DIM {
        let clone = clone_memo(theory, psi.dom())?;
        return Ok((1..=psi.cod()).all(|i| clone.contains(&psi.coordinate(i))));
    }
    Ok(enumerate_hom(theory, psi.dom(), psi.cod())?.contains(&psi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_hom(Theory::EMPTY, 1, 1).unwrap().len(), 3);
        assert_eq!(enumerate_hom(Theory::POSET, 2, 1).unwrap().len(), 6);
        for t in [Theory::EMPTY, Theory::MEET, Theory::POSET, Theory::FULL] {
            for n in 0..=3 {
                assert_eq!(enumerate_hom(t, 0, n).unwrap().len(), 1 << n);
            }
        }
    }

    #[test]
    fn fast_paths_agree_with_closure_small() {
        for t in [Theory::POSET, Theory::FULL] {
            for m in 0..=2 {
                for n in 0..=2 {
                    let a = enumerate_hom(t, m, n).unwrap();
                    let b = enumerate_hom_closure(t, m, n).unwrap();
                    assert_eq!(a.maps(), b.maps(), "{t} {m}→{n}");
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_hom(Theory::EMPTY, 5, 1), Err(Error::BoundsExceeded(_))));
    }
}
