//! Decomposition-closed subcomplexes of `i^* ◻^n_B` and certificates that an
//! inclusion of them is a composite of (inner) open-box fillings.
//!
//! The filtration adds, in stages `(i, j, k)` with `i` ascending, `j`
//! ascending and `k` descending, the cubes `κ N_k(φ)` for a face composite
//! `κ: ◻^{i+1} → ◻^n` and an active `φ: ◻^{j+1-k} → ◻^{i+1-k}`, filling the
//! open box whose missing face is `κ (φ ⊗ ◻^k)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::comparison::{cartesian_image_member, restrict};
use crate::cube_theory::{active_face_factor, enumerate_hom, face, is_member, CubeMap, FaceList, Theory};
use crate::cubical_set::{cube_map, representable, CubicalSet, Subcomplex};
use crate::decomposition::{critical_edge, split_tail, standard_decomposition, tail_length, Flavor};
use crate::error::{Error, Result};

/// Largest ambient dimension accepted by [`certify`] and [`verify`].
pub const MAX_AMBIENT: usize = 4;
/// Largest truncation accepted by [`certify`] and [`verify`].
pub const MAX_TRUNCATION: usize = 4;

/// A named subcomplex of `i^* ◻^n_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubcomplexSpec {
    /// The image of the unit `◻^n_A → i^* ◻^n_B`: the maps lying in `◻_A`.
    Unit,
    /// The image of `◻^p_A × ◻^q_A`: maps whose two deletions lie in `◻_A`.
    Cartesian(usize, usize),
    /// Every cube.
    Full,
}

impl fmt::Display for SubcomplexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubcomplexSpec::Unit => f.write_str("unit"),
            SubcomplexSpec::Cartesian(p, q) => write!(f, "cartesian:{p},{q}"),
            SubcomplexSpec::Full => f.write_str("full"),
        }
    }
}

impl FromStr for SubcomplexSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubcomplexSpec> {
        let bad = || Error::Parse(format!("unknown subcomplex `{s}`; expected unit, full or cartesian:p,q"));
        match s.trim() {
            "unit" => Ok(SubcomplexSpec::Unit),
            "full" => Ok(SubcomplexSpec::Full),
            other => {
                let rest = other.strip_prefix("cartesian:").ok_or_else(bad)?;
                let (p, q) = rest.split_once(',').ok_or_else(bad)?;
                Ok(SubcomplexSpec::Cartesian(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
            }
        }
    }
}

impl Serialize for SubcomplexSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SubcomplexSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<SubcomplexSpec, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `i^* ◻^n_B` with a lookup from maps to cubes.
pub struct Ambient {
    pub theory_a: Theory,
    pub theory_b: Theory,
    pub n: usize,
    pub set: Arc<CubicalSet>,
    index: Vec<HashMap<CubeMap, usize>>,
}

impl Ambient {
    pub fn new(theory_a: Theory, theory_b: Theory, n: usize, truncation: usize) -> Result<Ambient> {
        if !theory_a.is_subtheory_of(theory_b) {
            return Err(Error::NotSubtheory { sub: theory_a, sup: theory_b });
        }
        if n > MAX_AMBIENT || truncation > MAX_TRUNCATION {
            return Err(Error::BoundsExceeded(format!("n = {n}, D = {truncation}")));
        }
        let set = restrict(&representable(theory_b, n, truncation)?, theory_a)?;
        let index = (0..=truncation)
            .map(|d| (0..set.count(d)).map(|x| (cube_map(&set, d, x).expect("map label").clone(), x)).collect())
            .collect();
        Ok(Ambient { theory_a, theory_b, n, set, index })
    }

    /// [`Ambient::new`], memoized. The ambient depends only on its parameters,
    /// so sharing it between verifications trusts nothing from a certificate.
    pub fn shared(theory_a: Theory, theory_b: Theory, n: usize, truncation: usize) -> Result<Arc<Ambient>> {
        type Memo = Mutex<HashMap<(Theory, Theory, usize, usize), Arc<Ambient>>>;
        static MEMO: OnceLock<Memo> = OnceLock::new();
        let key = (theory_a, theory_b, n, truncation);
        let memo = MEMO.get_or_init(Default::default);
        if let Some(a) = memo.lock().expect("ambient memo").get(&key) {
            return Ok(a.clone());
        }
        let amb = Arc::new(Ambient::new(theory_a, theory_b, n, truncation)?);
        Ok(memo.lock().expect("ambient memo").entry(key).or_insert(amb).clone())
    }

    pub fn truncation(&self) -> usize {
        self.set.truncation()
    }

    pub fn map(&self, d: usize, x: usize) -> &CubeMap {
        cube_map(&self.set, d, x).expect("map label")
    }

    pub fn cube(&self, f: &CubeMap) -> Option<usize> {
        if f.cod() != self.n {
            return None;
        }
        self.index.get(f.dom())?.get(f).copied()
    }

    pub fn subcomplex(&self, spec: SubcomplexSpec) -> Result<Subcomplex> {
        let a = self.theory_a;
        if let SubcomplexSpec::Cartesian(p, q) = spec {
            if p + q != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, found: p + q });
            }
        }
        let mut members = Vec::new();
        for d in 0..=self.truncation() {
            let row = (0..self.set.count(d))
                .map(|x| {
                    let f = self.map(d, x);
                    match spec {
                        SubcomplexSpec::Unit => is_member(a, f),
                        SubcomplexSpec::Cartesian(p, q) => cartesian_image_member(f, p, q, a),
                        SubcomplexSpec::Full => Ok(true),
                    }
                })
                .collect::<Result<Vec<bool>>>()?;
            members.push(row);
        }
        Subcomplex::from_predicate(&self.set, |d, x| members[d][x])
    }

    /// Add the cube and everything it generates to `w`.
    fn close_over(&self, w: &mut [Vec<bool>], d: usize, x: usize) {
        let set = &self.set;
        let mut queue = VecDeque::from([(d, x)]);
        w[d][x] = true;
        while let Some((d, x)) = queue.pop_front() {
            for e in 0..=set.truncation() {
                for fi in 0..set.hom(e, d).len() {
                    let y = set.act_index(d, x, e, fi);
                    if !w[e][y] {
                        w[e][y] = true;
                        queue.push_back((e, y));
                    }
                }
            }
        }
    }
}

/// Why a subcomplex fails to be decomposition-closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureViolation {
    /// A map of `◻_A` that is missing.
    MissingUnitCube(CubeMap),
    /// `κ (φ ⊗ ◻^k)` is present but `κ N_k(φ)` is not.
    MissingDecomposition { kappa: FaceList, phi: CubeMap, k: usize },
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureViolation::MissingUnitCube(m) => write!(f, "unit cube {m} is missing"),
            ClosureViolation::MissingDecomposition { kappa, phi, k } => {
                write!(f, "{kappa} N_{k}({phi}) is missing")
            }
        }
    }
}

fn require_flavor(a: Theory, flavor: Flavor) -> Result<()> {
    if !a.contains(flavor.symbol()) {
        return Err(Error::MissingSymbol(a, flavor.symbol().name()));
    }
    Ok(())
}

/// `κ N_k(φ)`.
pub fn decomposition_cube(kappa: &FaceList, phi: &CubeMap, k: usize, flavor: Flavor) -> Result<CubeMap> {
    kappa.to_map().after(&standard_decomposition(phi, k, flavor)?)
}

/// Check that `s` contains the unit image and is closed under
/// `κ (φ ⊗ ◻^k) ↦ κ N_k(φ)` within the truncation.
pub fn is_decomposition_closed(amb: &Ambient, s: &Subcomplex, flavor: Flavor) -> Result<Option<ClosureViolation>> {
    require_flavor(amb.theory_a, flavor)?;
    if !Arc::ptr_eq(s.ambient(), &amb.set) {
        return Err(Error::Inconsistent("subcomplex of a different ambient".into()));
    }
    let top = amb.truncation();
    for d in 0..=top {
        for x in 0..amb.set.count(d) {
            let f = amb.map(d, x);
            if !s.contains(d, x) {
                if is_member(amb.theory_a, f)? {
                    return Ok(Some(ClosureViolation::MissingUnitCube(f.clone())));
                }
                continue;
            }
            if d + 1 > top {
                continue;
            }
            let (kappa, psi) = active_face_factor(f);
            for k in 0..=tail_length(&psi) {
                let phi = split_tail(&psi, k).expect("within the tail length");
                if phi.cod() == 0 {
                    continue;
                }
                let g = decomposition_cube(&kappa, &phi, k, flavor)?;
                let present = amb.cube(&g).is_some_and(|y| s.contains(d + 1, y));
                if !present {
                    return Ok(Some(ClosureViolation::MissingDecomposition { kappa, phi, k }));
                }
            }
        }
    }
    Ok(None)
}

/// One open-box filling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingStep {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Entries `(index, side)` of the face composite `κ`, indices decreasing.
    pub kappa: Vec<(usize, u8)>,
    pub phi: CubeMap,
    #[serde(rename = "missingFace")]
    pub missing_face: (usize, u8),
    pub inner: bool,
}

impl FillingStep {
    /// The filled cube `κ N_k(φ)`.
    pub fn interior(&self, n: usize, flavor: Flavor) -> Result<CubeMap> {
        decomposition_cube(&FaceList::new(n, self.kappa.clone())?, &self.phi, self.k, flavor)
    }

    /// Sort key within a stage.
    fn key(&self) -> (&[(usize, u8)], &CubeMap) {
        (&self.kappa, &self.phi)
    }

    fn stage(&self) -> (usize, usize, std::cmp::Reverse<usize>) {
        (self.i, self.j, std::cmp::Reverse(self.k))
    }
}

/// An ordered sequence of fillings turning `source` into `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingCertificate {
    #[serde(rename = "theoryA")]
    pub theory_a: Theory,
    #[serde(rename = "theoryB")]
    pub theory_b: Theory,
    pub flavor: Flavor,
    pub n: usize,
    pub truncation: usize,
    pub source: SubcomplexSpec,
    pub target: SubcomplexSpec,
    pub steps: Vec<FillingStep>,
    #[serde(rename = "allInner")]
    pub all_inner: bool,
}

/// What to certify; serialized with the same keys as a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertifyRequest {
    pub theory_a: Theory,
    pub theory_b: Theory,
    pub n: usize,
    pub truncation: usize,
    pub source: SubcomplexSpec,
    pub target: SubcomplexSpec,
    pub flavor: Flavor,
}

/// A certificate and the top-dimensional cubes it leaves uncovered.
#[derive(Clone, Debug)]
pub struct Certification {
    pub certificate: FillingCertificate,
    /// Cubes of `target` in dimension `D` not reached by the fillings; the
    /// fillings that would add them have interiors above the truncation.
    pub uncovered_top: usize,
}

/// Whether the critical edge of `interior` for the open box missing `(i, ε)` is constant.
pub fn is_inner(interior: &CubeMap, i: usize, eps: u8) -> Result<bool> {
    let e = interior.after(&critical_edge(interior.dom(), i, eps)?)?;
    Ok(e.apply(0) == e.apply(1))
}

fn is_standard_decomposition(phi: &CubeMap, flavor: Flavor) -> Result<bool> {
    let m = phi.dom();
    if m == 0 {
        return Ok(false);
    }
    let side = flavor.side() as u32;
    let base = CubeMap::from_fn(m - 1, phi.cod(), |a| phi.apply((a << 1) | side));
    Ok(standard_decomposition(&base, 0, flavor)? == *phi)
}

fn setup(
    theory_a: Theory,
    theory_b: Theory,
    n: usize,
    truncation: usize,
    source: SubcomplexSpec,
    target: SubcomplexSpec,
    flavor: Flavor,
) -> Result<(Arc<Ambient>, Subcomplex, Subcomplex)> {
    require_flavor(theory_a, flavor)?;
    let amb = Ambient::shared(theory_a, theory_b, n, truncation)?;
    let x = amb.subcomplex(source)?;
    let y = amb.subcomplex(target)?;
    if !x.is_subset_of(&y) {
        return Err(Error::Inconsistent(format!("{source} is not contained in {target}")));
    }
    for (name, s) in [(source, &x), (target, &y)] {
        if let Some(v) = is_decomposition_closed(&amb, s, flavor)? {
            return Err(Error::NotDecompositionClosed(format!("{name}: {v}")));
        }
    }
    Ok((amb, x, y))
}

fn members(s: &Subcomplex) -> Vec<Vec<bool>> {
    (0..=s.ambient().truncation()).map(|d| (0..s.ambient().count(d)).map(|x| s.contains(d, x)).collect()).collect()
}

/// Generate the filling certificate for `source ⊆ target`.
pub fn certify(req: &CertifyRequest) -> Result<Certification> {
    let (amb, x, y) = setup(req.theory_a, req.theory_b, req.n, req.truncation, req.source, req.target, req.flavor)?;
    let top = req.truncation;
    let n = req.n;
    let side = req.flavor.side();
    let mut w = members(&x);
    let mut steps = Vec::new();
    for i in 0..n {
        for j in 0..=top.saturating_sub(2) {
            if top < 2 {
                break;
            }
            for k in (0..=j.min(i)).rev() {
                let phis = enumerate_hom(req.theory_b, j + 1 - k, i + 1 - k)?;
                let mut stage = Vec::new();
                for kappa in FaceList::all(n, i + 1) {
                    for phi in phis.active() {
                        let psi = phi.tensor(&CubeMap::identity(k));
                        let c = kappa.to_map().after(&psi)?;
                        let ci = amb.cube(&c).ok_or(Error::NotMember(req.theory_b))?;
                        if !y.contains(j + 1, ci) {
                            continue;
                        }
                        let redundant = amb.set.is_degenerate(j + 1, ci)?
                            || tail_length(phi) > 0
                            || is_standard_decomposition(phi, req.flavor)?;
                        if redundant {
                            if !w[j + 1][ci] {
                                return Err(Error::Inconsistent(format!(
                                    "excluded cube {c} is absent at stage ({i}, {j}, {k})"
                                )));
                            }
                            continue;
                        }
                        if w[j + 1][ci] {
                            continue;
                        }
                        let interior = decomposition_cube(&kappa, phi, k, req.flavor)?;
                        let missing = (j + 2 - k, side);
                        let inner = is_inner(&interior, missing.0, missing.1)?;
                        stage.push((
                            FillingStep {
                                i,
                                j,
                                k,
                                kappa: kappa.entries().to_vec(),
                                phi: phi.clone(),
                                missing_face: missing,
                                inner,
                            },
                            interior,
                        ));
                    }
                }
                stage.sort_by(|a, b| a.0.key().cmp(&b.0.key()));
                for (step, interior) in stage {
                    let yi = amb.cube(&interior).ok_or(Error::NotMember(req.theory_b))?;
                    amb.close_over(&mut w, j + 2, yi);
                    steps.push(step);
                }
            }
        }
    }
    for d in 0..top {
        let missing = y.members(d).into_iter().filter(|&c| !w[d][c]).count();
        if missing > 0 {
            return Err(Error::BoundsExceeded(format!("{missing} cubes of dimension {d} left uncovered")));
        }
    }
    let uncovered_top = y.members(top).into_iter().filter(|&c| !w[top][c]).count();
    let all_inner = steps.iter().all(|s| s.inner);
    let certificate = FillingCertificate {
        theory_a: req.theory_a,
        theory_b: req.theory_b,
        flavor: req.flavor,
        n,
        truncation: top,
        source: req.source,
        target: req.target,
        steps,
        all_inner,
    };
    Ok(Certification { certificate, uncovered_top })
}

/// The individual checks performed by [`verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// The inputs: theories, subcomplexes and their closure.
    Setup,
    /// Shape of the step and the computed interior.
    A,
    /// Every other face of the interior is present.
    B,
    /// Interior and missing face are new and non-degenerate.
    C,
    /// The inner flag.
    D,
    /// Final coverage, the overall inner flag and the step order.
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Malformed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Malformed => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: Check,
    /// Index of the offending step, if any.
    pub step: Option<usize>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub outcome: Outcome,
    #[serde(rename = "stepsChecked")]
    pub steps_checked: usize,
    pub failure: Option<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    fn fail(check: Check, step: Option<usize>, steps_checked: usize, message: impl Into<String>) -> VerifyReport {
        VerifyReport {
            outcome: Outcome::Fail,
            steps_checked,
            failure: Some(Failure { check, step, message: message.into() }),
        }
    }
}

/// Parse and verify a certificate given as JSON.
pub fn verify_json(text: &str) -> VerifyReport {
    match serde_json::from_str::<FillingCertificate>(text) {
        Ok(cert) => verify(&cert),
        Err(e) => VerifyReport {
            outcome: Outcome::Malformed,
            steps_checked: 0,
            failure: Some(Failure { check: Check::Setup, step: None, message: e.to_string() }),
        },
    }
}

/// Replay a certificate from scratch.
pub fn verify(cert: &FillingCertificate) -> VerifyReport {
    if cert.n > MAX_AMBIENT || cert.truncation > MAX_TRUNCATION {
        return VerifyReport {
            outcome: Outcome::Malformed,
            steps_checked: 0,
            failure: Some(Failure {
                check: Check::Setup,
                step: None,
                message: format!("bounds n ≤ {MAX_AMBIENT}, D ≤ {MAX_TRUNCATION} exceeded"),
            }),
        };
    }
    let (amb, x, y) = match setup(
        cert.theory_a,
        cert.theory_b,
        cert.n,
        cert.truncation,
        cert.source,
        cert.target,
        cert.flavor,
    ) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(Check::Setup, None, 0, e.to_string()),
    };
    let top = cert.truncation;
    let mut w = members(&x);
    for (si, step) in cert.steps.iter().enumerate() {
        let fail = |check, msg: String| VerifyReport::fail(check, Some(si), si, msg);
        let interior = match check_shape(&amb, cert, step) {
            Ok(f) => f,
            Err(msg) => return fail(Check::A, msg),
        };
        let Some(yi) = amb.cube(&interior) else {
            return fail(Check::A, format!("interior {interior} is not a cube"));
        };
        if !y.contains(step.j + 2, yi) {
            return fail(Check::A, format!("interior {interior} is not in the target"));
        }
        let d = step.j + 2;
        let mut missing_cube = None;
        for l in 1..=d {
            for e in 0..=1u8 {
                let g = interior.after(&face(d, l, e)).expect("face of the interior");
                let gi = amb.cube(&g).expect("faces of cubes are cubes");
                if (l, e) == step.missing_face {
                    missing_cube = Some(gi);
                } else if !w[d - 1][gi] {
                    return fail(Check::B, format!("face ({l},{e}) of {interior} is absent"));
                }
            }
        }
        let mc = missing_cube.expect("missing face exists");
        if w[d - 1][mc] || w[d][yi] {
            return fail(Check::C, format!("{interior} or its missing face is already present"));
        }
        let degenerate = amb.set.is_degenerate(d, yi).and_then(|a| Ok(a || amb.set.is_degenerate(d - 1, mc)?));
        match degenerate {
            Ok(false) => {}
            Ok(true) => return fail(Check::C, format!("{interior} or its missing face is degenerate")),
            Err(e) => return fail(Check::C, e.to_string()),
        }
        match is_inner(&interior, step.missing_face.0, step.missing_face.1) {
            Ok(inner) if inner == step.inner => {}
            Ok(_) => return fail(Check::D, format!("inner flag should be {}", !step.inner)),
            Err(e) => return fail(Check::D, e.to_string()),
        }
        amb.close_over(&mut w, d, yi);
    }
    let done = cert.steps.len();
    let fail_e = |msg: String| VerifyReport::fail(Check::E, None, done, msg);
    for d in 0..top {
        if let Some(c) = y.members(d).into_iter().find(|&c| !w[d][c]) {
            return fail_e(format!("target cube {} is not covered", amb.map(d, c)));
        }
    }
    if cert.all_inner != cert.steps.iter().all(|s| s.inner) {
        return fail_e("allInner disagrees with the steps".into());
    }
    for (si, pair) in cert.steps.windows(2).enumerate() {
        let (s, t) = (&pair[0], &pair[1]);
        let ordered = s.stage() < t.stage() || (s.stage() == t.stage() && s.key() < t.key());
        if !ordered {
            return VerifyReport::fail(Check::E, Some(si + 1), done, "steps out of canonical order");
        }
    }
    VerifyReport { outcome: Outcome::Pass, steps_checked: done, failure: None }
}

/// Check (a): indices, `κ`, `φ` and the missing face; returns the interior.
fn check_shape(amb: &Ambient, cert: &FillingCertificate, step: &FillingStep) -> std::result::Result<CubeMap, String> {
    let (n, top) = (cert.n, cert.truncation);
    let FillingStep { i, j, k, .. } = *step;
    if i >= n || j + 2 > top || k > j || k > i {
        return Err(format!("stage ({i}, {j}, {k}) out of range"));
    }
    let kappa = FaceList::new(n, step.kappa.clone()).map_err(|e| e.to_string())?;
    if kappa.source() != i + 1 {
        return Err(format!("κ has source {} instead of {}", kappa.source(), i + 1));
    }
    if (step.phi.dom(), step.phi.cod()) != (j + 1 - k, i + 1 - k) {
        return Err(format!("φ is {}→{}, expected {}→{}", step.phi.dom(), step.phi.cod(), j + 1 - k, i + 1 - k));
    }
    let (fixed, _) = active_face_factor(&step.phi);
    if !fixed.is_empty() {
        return Err(format!("φ = {} is not active", step.phi));
    }
    if !is_member(amb.theory_b, &step.phi).map_err(|e| e.to_string())? {
        return Err(format!("φ = {} is not in {}", step.phi, amb.theory_b));
    }
    if step.missing_face != (j + 2 - k, cert.flavor.side()) {
        return Err(format!("missing face {:?} should be ({}, {})", step.missing_face, j + 2 - k, cert.flavor.side()));
    }
    decomposition_cube(&kappa, &step.phi, k, cert.flavor).map_err(|e| e.to_string())
}

/// Every single-field corruption of a certificate, named: each top-level
/// field changed, each step field nudged, each bit of each `φ` row flipped,
/// and each step dropped, duplicated or swapped with its successor.
pub fn single_field_mutations(cert: &FillingCertificate) -> Vec<(String, serde_json::Value)> {
    use serde_json::{json, Value};
    let v = serde_json::to_value(cert).expect("certificates serialize");
    let mut out = Vec::new();
    let mut set = |name: String, edit: &dyn Fn(&mut Value)| {
        let mut m = v.clone();
        edit(&mut m);
        out.push((name, m));
    };
    let other_a = if cert.theory_a == Theory::MEET_JOIN { Theory::MEET } else { Theory::MEET_JOIN };
    let other_b = if cert.theory_b == Theory::FULL { Theory::POSET } else { Theory::FULL };
    let other_flavor = match cert.flavor {
        Flavor::Meet => Flavor::Join,
        Flavor::Join => Flavor::Meet,
    };
    let swap_spec = |s: SubcomplexSpec| if s == SubcomplexSpec::Full { SubcomplexSpec::Unit } else { SubcomplexSpec::Full };
    set("theoryA".into(), &|m| m["theoryA"] = json!(other_a));
    set("theoryB".into(), &|m| m["theoryB"] = json!(other_b));
    set("flavor".into(), &|m| m["flavor"] = json!(other_flavor));
    set("n+1".into(), &|m| m["n"] = json!(cert.n + 1));
    if cert.n > 0 {
        set("n-1".into(), &|m| m["n"] = json!(cert.n - 1));
    }
    set("truncation+1".into(), &|m| m["truncation"] = json!(cert.truncation + 1));
    if cert.truncation > 0 {
        set("truncation-1".into(), &|m| m["truncation"] = json!(cert.truncation - 1));
    }
    set("source".into(), &|m| m["source"] = json!(swap_spec(cert.source)));
    set("target".into(), &|m| m["target"] = json!(swap_spec(cert.target)));
    set("allInner".into(), &|m| m["allInner"] = json!(!cert.all_inner));
    for (si, s) in cert.steps.iter().enumerate() {
        for (f, val) in [("i", s.i), ("j", s.j), ("k", s.k)] {
            set(format!("step {si} {f}+1"), &|m| m["steps"][si][f] = json!(val + 1));
            if val > 0 {
                set(format!("step {si} {f}-1"), &|m| m["steps"][si][f] = json!(val - 1));
            }
        }
        set(format!("step {si} inner"), &|m| m["steps"][si]["inner"] = json!(!s.inner));
        let (l, e) = s.missing_face;
        set(format!("step {si} missingFace side"), &|m| m["steps"][si]["missingFace"] = json!([l, 1 - e]));
        set(format!("step {si} missingFace index"), &|m| m["steps"][si]["missingFace"] = json!([l + 1, e]));
        for (ki, &(a, b)) in s.kappa.iter().enumerate() {
            for new in [(a, 1 - b), (a + 1, b), (a.saturating_sub(1), b)] {
                let mut k2 = s.kappa.clone();
                k2[ki] = new;
                set(format!("step {si} kappa[{ki}]"), &|m| m["steps"][si]["kappa"] = json!(k2));
            }
        }
        if !s.kappa.is_empty() {
            set(format!("step {si} kappa dropped"), &|m| m["steps"][si]["kappa"] = json!([]));
        }
        let rows = s.phi.table_strings();
        for (ri, row) in rows.iter().enumerate() {
            for bi in 0..row.len() {
                let mut bits: Vec<char> = row.chars().collect();
                bits[bi] = if bits[bi] == '0' { '1' } else { '0' };
                let flipped: String = bits.into_iter().collect();
                set(format!("step {si} phi[{ri}][{bi}]"), &|m| {
                    m["steps"][si]["phi"]["table"][ri] = Value::String(flipped.clone())
                });
            }
        }
    }
    let n = cert.steps.len();
    for si in 0..n {
        set(format!("drop step {si}"), &|m| {
            m["steps"].as_array_mut().expect("steps array").remove(si);
        });
        set(format!("duplicate step {si}"), &|m| {
            let steps = m["steps"].as_array_mut().expect("steps array");
            let dup = steps[si].clone();
            steps.insert(si, dup);
        });
        if si + 1 < n {
            set(format!("swap steps {si},{}", si + 1), &|m| {
                m["steps"].as_array_mut().expect("steps array").swap(si, si + 1);
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(n: usize, source: SubcomplexSpec, target: SubcomplexSpec) -> CertifyRequest {
        CertifyRequest {
            theory_a: Theory::MEET,
            theory_b: Theory::POSET,
            n,
            truncation: 3,
            source,
            target,
            flavor: Flavor::Meet,
        }
    }

    #[test]
    fn spec_strings() {
        for s in ["unit", "full", "cartesian:1,2"] {
            assert_eq!(s.parse::<SubcomplexSpec>().unwrap().to_string(), s);
        }
        assert!("cartesian:1".parse::<SubcomplexSpec>().is_err());
    }

    #[test]
    fn interval_certificate() {
        let c = certify(&req(1, SubcomplexSpec::Unit, SubcomplexSpec::Full)).unwrap();
        let cert = &c.certificate;
        assert!(cert.all_inner);
        assert!(verify(cert).passed());
        let join = CubeMap::from_coords(2, 1, |a| vec![a[0] | a[1]]);
        let step = cert.steps.iter().find(|s| s.phi == join).expect("a∨b is filled");
        assert_eq!((step.i, step.j, step.k), (0, 1, 0));
        let interior = step.interior(1, Flavor::Meet).unwrap();
        assert_eq!(interior, CubeMap::from_coords(3, 1, |a| vec![(a[0] | a[1]) & a[2]]));
    }

    #[test]
    fn same_source_and_target() {
        let c = certify(&req(1, SubcomplexSpec::Full, SubcomplexSpec::Full)).unwrap();
        assert!(c.certificate.steps.is_empty());
        assert!(verify(&c.certificate).passed());
    }
}
