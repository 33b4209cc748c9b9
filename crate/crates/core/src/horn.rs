//! Bounded-evidence Horn test for `I(G, x)^{-q}`: a scan for vanishing
//! coefficients plus exact rational-function fitting of step ratios along
//! rays of fixed support.
//!
//! The verdict only speaks about the sampled window. `HornConsistent` means
//! every ray with enough samples admitted a fit within the caps;
//! `RatioFitFailed` means some ray did not.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::closed_forms::{a_vector, chordal_inverse_power_coefficient};
use crate::exponent::{monomials_up_to, ExponentVector};
use crate::graph::{induced_cycles, Graph, GraphFamily, Label, PEOrdering};
use crate::guard::Guard;
use crate::linalg::{nullspace, rank};
use crate::qpoly::QPolynomial;
use crate::rational::{self, int, Rational};
use crate::series::{independence_series_on, series_int_power, to_rational, BoxSeries};
use crate::{Error, Result};

/// Coefficients `c_m` of `I(G, x)^power` for every `m` over `window` with
/// `|m| <= degree_bound`, zeros included.
#[derive(Clone, Debug)]
pub struct CoefficientTable {
    pub graph: String,
    pub power: i64,
    pub degree_bound: u32,
    pub window: Vec<Label>,
    entries: BTreeMap<ExponentVector, Rational>,
}

impl CoefficientTable {
    pub fn get(&self, m: &ExponentVector) -> Option<&Rational> {
        self.entries.get(m)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in graded order.
    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        let mut all: Vec<_> = self.entries.iter().collect();
        all.sort_by(|a, b| a.0.graded_cmp(b.0));
        all.into_iter()
    }
}

fn monomial_count(vars: usize, degree: u32) -> u128 {
    // binom(vars + degree, degree)
    (1..=degree as u128).fold(1u128, |acc, k| acc.saturating_mul(vars as u128 + k) / k)
}

pub fn coefficient_table(family: &GraphFamily, power: i64, window: &[Label], degree_bound: u32, guard: Guard) -> Result<CoefficientTable> {
    let mut window = window.to_vec();
    window.sort_unstable();
    window.dedup();
    let count = monomial_count(window.len(), degree_bound);
    guard.check("coefficient table", count.saturating_mul(power.unsigned_abs().max(1) as u128))?;
    let series = series_int_power(&independence_series_on(family, &window, degree_bound)?, power)?;
    let entries = monomials_up_to(&window, degree_bound)
        .into_iter()
        .map(|m| {
            let c = series.coefficient(&m).expect("within bound");
            (m, c)
        })
        .collect();
    Ok(CoefficientTable { graph: family.spec_name(), power, degree_bound, window, entries })
}

/// The first `m` in graded order with `c_m = 0`.
pub fn zero_scan(t: &CoefficientTable) -> Option<ExponentVector> {
    t.iter().find(|(_, c)| c.is_zero()).map(|(m, _)| m.clone())
}

/// A one-parameter family of exponent vectors with constant support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ray {
    /// `m_j = 1` on `support` except `m_direction = t`, `t >= 1`; step `e_direction`.
    Axis { support: Vec<Label>, direction: Label },
    /// `m = a` on `vertices`, `a >= 0`; step is the indicator of `vertices`.
    Diagonal { vertices: Vec<Label> },
}

impl Ray {
    pub fn first_parameter(&self) -> u32 {
        match self {
            Ray::Axis { .. } => 1,
            Ray::Diagonal { .. } => 0,
        }
    }

    pub fn point(&self, t: u32) -> ExponentVector {
        match self {
            Ray::Axis { support, direction } => {
                ExponentVector::from_pairs(support.iter().map(|&v| (v, if v == *direction { t } else { 1 })))
            }
            Ray::Diagonal { vertices } => ExponentVector::from_pairs(vertices.iter().map(|&v| (v, t))),
        }
    }

    pub fn step(&self) -> ExponentVector {
        match self {
            Ray::Axis { direction, .. } => ExponentVector::unit(*direction),
            Ray::Diagonal { vertices } => ExponentVector::indicator(vertices),
        }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ray::Axis { support, direction } => write!(f, "axis {direction} on {support:?}"),
            Ray::Diagonal { vertices } => write!(f, "diagonal on {vertices:?}"),
        }
    }
}

/// `c_{m + step} / c_m` at the ray point with free parameter `parameter`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioSample {
    pub base: ExponentVector,
    pub parameter: u32,
    #[serde(with = "rational::as_string")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaySamples {
    pub ray: Ray,
    pub samples: Vec<RatioSample>,
    /// Ray points skipped because `c_m = 0`.
    pub excluded: Vec<ExponentVector>,
}

impl RaySamples {
    pub fn fit_samples(&self) -> Vec<FitSample> {
        self.samples
            .iter()
            .map(|s| FitSample { point: vec![int(s.parameter)], value: s.value.clone() })
            .collect()
    }
}

/// Up to `length` consecutive ratios along `ray`, stopping where the ray
/// leaves the table.
pub fn ratio_samples(t: &CoefficientTable, ray: &Ray, length: u32) -> RaySamples {
    let step = ray.step();
    let mut out = RaySamples { ray: ray.clone(), samples: Vec::new(), excluded: Vec::new() };
    for k in 0..length {
        let parameter = ray.first_parameter() + k;
        let m = ray.point(parameter);
        let next = m.add(&step);
        let (Some(cm), Some(cn)) = (t.get(&m), t.get(&next)) else {
            break;
        };
        if cm.is_zero() {
            out.excluded.push(m);
        } else {
            out.samples.push(RatioSample { base: m, parameter, value: cn / cm });
        }
    }
    out
}

/// Diagonal ratios `c_{(a+1)1_S} / c_{a 1_S}` for `a = 0..length`, read off a
/// dense box of `I(G[S], x)^power`. Setting the variables outside `S` to zero
/// does not change these coefficients.
pub fn diagonal_samples(g: &Graph, power: i64, vertices: &[Label], length: u32, guard: Guard) -> Result<RaySamples> {
    let sub = g.induced_subgraph(vertices)?;
    let cells = (length as u128 + 1).saturating_pow(sub.vertex_count() as u32);
    guard.check("diagonal box", cells.saturating_mul(power.unsigned_abs().max(1) as u128))?;
    let diag = BoxSeries::independence_power(&sub, power, length).diagonal();
    let ray = Ray::Diagonal { vertices: sub.labels().to_vec() };
    let mut out = RaySamples { ray: ray.clone(), samples: Vec::new(), excluded: Vec::new() };
    for a in 0..length {
        let (cm, cn) = (&diag[a as usize], &diag[a as usize + 1]);
        if cm.is_zero() {
            out.excluded.push(ray.point(a));
        } else {
            out.samples.push(RatioSample { base: ray.point(a), parameter: a, value: to_rational(cn) / to_rational(cm) });
        }
    }
    Ok(out)
}

/// Total-degree caps for numerator and denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitCaps {
    pub numerator: u32,
    pub denominator: u32,
}

impl FitCaps {
    pub const CONSISTENCY: FitCaps = FitCaps { numerator: 2, denominator: 2 };
    pub const REFUTATION: FitCaps = FitCaps { numerator: 4, denominator: 4 };

    /// Numerator plus denominator coefficients in `vars` variables.
    pub fn unknowns(self, vars: usize) -> usize {
        (monomial_count(vars, self.numerator) + monomial_count(vars, self.denominator)) as usize
    }

    /// `unknowns - 2`. The coefficient vector is only defined up to scale, so
    /// a fit has `unknowns - 1` projective parameters.
    pub fn dof(self, vars: usize) -> usize {
        self.unknowns(vars) - 2
    }

    /// `dof + 2 = unknowns` samples, one more than the projective parameter
    /// count, so generic data admits no spurious fit.
    pub fn required_samples(self, vars: usize) -> usize {
        self.dof(vars) + 2
    }
}

impl Serialize for FitCaps {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.numerator, self.denominator].serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitSample {
    pub point: Vec<Rational>,
    pub value: Rational,
}

/// Sparse multivariate polynomial: `(exponents, coefficient)` pairs.
type Terms = Vec<(Vec<u32>, Rational)>;

/// `P / Q` in `variables` unknowns. Univariate fits are in lowest terms with
/// a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    variables: usize,
    numerator: Terms,
    denominator: Terms,
}

fn eval_terms(terms: &Terms, point: &[Rational]) -> Rational {
    terms
        .iter()
        .map(|(e, c)| e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize)))
        .sum()
}

fn univariate(terms: &Terms) -> QPolynomial {
    let len = terms.iter().map(|(e, _)| e[0] as usize + 1).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); len];
    for (e, c) in terms {
        coeffs[e[0] as usize] += c;
    }
    QPolynomial::from_coeffs(coeffs)
}

fn from_univariate(p: &QPolynomial) -> Terms {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (vec![k as u32], c.clone()))
        .collect()
}

fn format_terms(terms: &Terms, vars: usize) -> String {
    if vars == 1 {
        return univariate(terms).format_with("t");
    }
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(e, c)| {
            let mut s = format!("{c}");
            for (k, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => s.push_str(&format!("*t{}", k + 1)),
                    _ => s.push_str(&format!("*t{}^{p}", k + 1)),
                }
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl RationalFunction {
    pub fn variables(&self) -> usize {
        self.variables
    }

    /// `None` where the denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let q = eval_terms(&self.denominator, point);
        (!q.is_zero()).then(|| eval_terms(&self.numerator, point) / q)
    }

    /// Numerator and denominator as polynomials, for one-variable functions.
    pub fn as_univariate(&self) -> Option<(QPolynomial, QPolynomial)> {
        (self.variables == 1).then(|| (univariate(&self.numerator), univariate(&self.denominator)))
    }

    /// Total degrees of numerator and denominator.
    pub fn degrees(&self) -> (u32, u32) {
        let deg = |t: &Terms| t.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0);
        (deg(&self.numerator), deg(&self.denominator))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_terms(&self.numerator, self.variables);
        let den = format_terms(&self.denominator, self.variables);
        if den == "1" {
            f.write_str(&num)
        } else {
            write!(f, "({num}) / ({den})")
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = |t: &Terms| -> Vec<(Vec<u32>, String)> { t.iter().map(|(e, c)| (e.clone(), c.to_string())).collect() };
        let mut st = s.serialize_struct("RationalFunction", 4)?;
        st.serialize_field("variables", &self.variables)?;
        st.serialize_field("numerator", &terms(&self.numerator))?;
        st.serialize_field("denominator", &terms(&self.denominator))?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

fn dense_monomials(vars: usize, cap: u32) -> Vec<Vec<u32>> {
    let labels: Vec<Label> = (1..=vars as Label).collect();
    monomials_up_to(&labels, cap).into_iter().map(|m| m.to_dense(&labels)).collect()
}

/// Numerator monomials, denominator monomials and the rows of the linear system.
type FitSystem = (Vec<Vec<u32>>, Vec<Vec<u32>>, Vec<Vec<Rational>>);

fn fit_system(samples: &[FitSample], caps: FitCaps) -> FitSystem {
    let vars = samples.first().map_or(0, |s| s.point.len());
    let num = dense_monomials(vars, caps.numerator);
    let den = dense_monomials(vars, caps.denominator);
    let mono = |e: &[u32], x: &[Rational]| -> Rational {
        e.iter().zip(x).fold(Rational::one(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
    };
    let rows = samples
        .iter()
        .map(|s| {
            let mut row: Vec<Rational> = num.iter().map(|e| mono(e, &s.point)).collect();
            row.extend(den.iter().map(|e| -(&s.value * mono(e, &s.point))));
            row
        })
        .collect();
    (num, den, rows)
}

/// Rank of the cross-multiplied system `P(x_s) - y_s Q(x_s) = 0` and its
/// number of unknowns. A fit can exist only when the rank is below the
/// number of unknowns.
pub fn fit_rank(samples: &[FitSample], caps: FitCaps) -> (usize, usize) {
    let (num, den, rows) = fit_system(samples, caps);
    let u = num.len() + den.len();
    (rank(&rows, u), u)
}

/// Some `P / Q` with degrees within `caps` reproducing every sample exactly,
/// or `None`. Requires at least `caps.required_samples` samples.
pub fn rational_fit(samples: &[FitSample], caps: FitCaps) -> Result<Option<RationalFunction>> {
    let vars = samples.first().map_or(0, |s| s.point.len());
    if samples.iter().any(|s| s.point.len() != vars) {
        return Err(Error::InvalidArgument("fit samples must share one dimension".into()));
    }
    let need = caps.required_samples(vars);
    if samples.len() < need {
        return Err(Error::NotEnoughSamples { got: samples.len(), need });
    }
    let (num, den, rows) = fit_system(samples, caps);
    let split = num.len();
    for v in nullspace(&rows, split + den.len()) {
        if v[split..].iter().all(Zero::is_zero) {
            continue;
        }
        let collect = |monos: &[Vec<u32>], coeffs: &[Rational]| -> Terms {
            monos.iter().cloned().zip(coeffs.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect()
        };
        let mut candidate = RationalFunction { variables: vars, numerator: collect(&num, &v[..split]), denominator: collect(&den, &v[split..]) };
        normalise(&mut candidate);
        if samples.iter().all(|s| candidate.eval(&s.point).as_ref() == Some(&s.value)) {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

fn normalise(f: &mut RationalFunction) {
    if f.variables == 1 {
        let (p, q) = (univariate(&f.numerator), univariate(&f.denominator));
        let g = p.gcd(&q);
        let (p, q) = (p.div_rem(&g).0, q.div_rem(&g).0);
        let lead = q.leading_coefficient().recip();
        f.numerator = from_univariate(&p.scale(&lead));
        f.denominator = from_univariate(&q.scale(&lead));
    } else {
        let lead = f.denominator[0].1.recip();
        for (_, c) in f.numerator.iter_mut().chain(f.denominator.iter_mut()) {
            *c *= &lead;
        }
    }
}

/// Which diagonal rays a verdict samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalScope {
    /// Vertex sets of induced cycles of length at least 4 inside the window.
    #[default]
    InducedCycles,
    /// The whole window.
    Window,
    None,
}

#[derive(Clone, Copy, Debug)]
pub struct HornConfig {
    pub degree_bound: u32,
    pub caps: FitCaps,
    /// Samples per ray; defaults to the minimum the caps require.
    pub ray_length: Option<u32>,
    pub diagonal: DiagonalScope,
    pub guard: Guard,
}

impl HornConfig {
    pub fn new(degree_bound: u32, caps: FitCaps) -> Self {
        HornConfig { degree_bound, caps, ray_length: None, diagonal: DiagonalScope::default(), guard: Guard::default() }
    }

    pub fn ray_length(&self) -> u32 {
        self.ray_length.unwrap_or(self.caps.required_samples(1) as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HornStatus {
    HornConsistent,
    ZeroCoefficientWitness,
    RatioFitFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayFit {
    pub ray: Ray,
    pub samples: usize,
    pub function: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedRay {
    pub ray: Ray,
    pub samples: usize,
    pub need: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    Zero {
        window: Vec<Label>,
        degree_bound: u32,
        witness: ExponentVector,
    },
    Consistent {
        window: Vec<Label>,
        degree_bound: u32,
        caps: FitCaps,
        ray_length: u32,
        fits: Vec<RayFit>,
        skipped: Vec<SkippedRay>,
        excluded: Vec<ExponentVector>,
    },
    Failed {
        window: Vec<Label>,
        degree_bound: u32,
        caps: FitCaps,
        ray_length: u32,
        ray: Ray,
        samples: Vec<RatioSample>,
        rank: usize,
        unknowns: usize,
        rays_fitted_before: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornVerdict {
    pub graph: String,
    pub q: i64,
    pub status: HornStatus,
    pub evidence: Evidence,
}

impl HornVerdict {
    pub fn failing_ray(&self) -> Option<&Ray> {
        match &self.evidence {
            Evidence::Failed { ray, .. } => Some(ray),
            _ => None,
        }
    }
}

/// Axis rays over every nonempty support in the window, supports by size then
/// label order, directions ascending.
pub fn axis_rays(window: &[Label], degree_bound: u32, guard: Guard) -> Result<Vec<Ray>> {
    let n = window.len();
    if n > 30 {
        return Err(Error::GuardExceeded { what: "axis ray supports", estimate: 1u128 << n.min(127), limit: guard.0 });
    }
    guard.check("axis ray supports", 1u128 << n)?;
    let mut supports: Vec<Vec<Label>> = (1u64..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| window[i]).collect::<Vec<_>>())
        .filter(|s: &Vec<Label>| (s.len() as u32) < degree_bound)
        .collect();
    supports.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(supports
        .into_iter()
        .flat_map(|s| s.clone().into_iter().map(move |d| Ray::Axis { support: s.clone(), direction: d }))
        .collect())
}

/// Runs the zero scan on `I(G, x)^{-q}` over `window` up to the degree bound,
/// then fits every axis ray and the configured diagonal rays.
pub fn horn_verdict(family: &GraphFamily, q: i64, window: &[Label], config: &HornConfig) -> Result<HornVerdict> {
    if q < 1 {
        return Err(Error::InvalidArgument(format!("the Horn test expects q >= 1, got {q}")));
    }
    let d = config.degree_bound;
    let table = coefficient_table(family, -q, window, d, config.guard)?;
    let window = table.window.clone();
    let verdict = |status, evidence| HornVerdict { graph: family.spec_name(), q, status, evidence };
    if let Some(witness) = zero_scan(&table) {
        return Ok(verdict(HornStatus::ZeroCoefficientWitness, Evidence::Zero { window, degree_bound: d, witness }));
    }

    let caps = config.caps;
    let length = config.ray_length();
    let need = caps.required_samples(1);
    let mut fits = Vec::new();
    let mut skipped = Vec::new();
    let mut excluded = Vec::new();

    let graph = family.materialize(&window)?;
    let diagonal_sets: Vec<Vec<Label>> = match config.diagonal {
        DiagonalScope::InducedCycles => {
            let mut cycles = induced_cycles(&graph, 4);
            cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            cycles
        }
        DiagonalScope::Window if window.len() >= 2 => vec![window.clone()],
        _ => Vec::new(),
    };

    let mut runs: Vec<RaySamples> = axis_rays(&window, d, config.guard)?
        .iter()
        .map(|ray| ratio_samples(&table, ray, length))
        .collect();
    for set in &diagonal_sets {
        runs.push(diagonal_samples(&graph, -q, set, length, config.guard)?);
    }

    for run in runs {
        excluded.extend(run.excluded.iter().cloned());
        if run.samples.len() < need {
            skipped.push(SkippedRay { ray: run.ray, samples: run.samples.len(), need });
            continue;
        }
        let points = run.fit_samples();
        match rational_fit(&points, caps)? {
            Some(function) => fits.push(RayFit { ray: run.ray, samples: points.len(), function }),
            None => {
                let (rank, unknowns) = fit_rank(&points, caps);
                let evidence = Evidence::Failed {
                    window,
                    degree_bound: d,
                    caps,
                    ray_length: length,
                    ray: run.ray,
                    samples: run.samples,
                    rank,
                    unknowns,
                    rays_fitted_before: fits.len(),
                };
                return Ok(verdict(HornStatus::RatioFitFailed, evidence));
            }
        }
    }
    Ok(verdict(
        HornStatus::HornConsistent,
        Evidence::Consistent { window, degree_bound: d, caps, ray_length: length, fits, skipped, excluded },
    ))
}

/// `c_{m + e_i} / c_m` for `I(G, x)^{-q}` on a chordal graph, `i` in the
/// support of `m`, by telescoping the elimination-order product. With
/// `x_r = q - 1 + a_r(m)` and `k_r = m_{i_r}`, the factor for `i_r = i` is
/// `(x_r + 1) / (k_r + 1)`, the factor for a later neighbour of `i` is
/// `(x_r + 1) / (x_r + 1 - k_r)`, all others are 1, and the sign is `-1`.
pub fn chordal_axis_ratio(g: &Graph, peo: &PEOrdering, q: &Rational, m: &ExponentVector, i: Label) -> Result<Rational> {
    if m.get(i) == 0 {
        return Err(Error::InvalidArgument(format!("direction {i} is outside the support of {m}")));
    }
    let a = a_vector(g, peo, m)?;
    let rank_i = peo.rank(i);
    let mut ratio = -Rational::one();
    for ((&v, &k), &ar) in a.support.iter().zip(&a.exponents).zip(&a.values) {
        let x1 = q + int(ar);
        if v == i {
            ratio *= x1 / int(k + 1);
        } else if g.has_edge(v, i) && peo.rank(v) > rank_i {
            ratio *= &x1 / (&x1 - int(k));
        }
    }
    Ok(ratio)
}

/// The step ratio on a chordal graph predicted by the elimination-order
/// product: `c_{m + step} / c_m` for `I(G, x)^{-q}` at ray parameter `t`.
pub fn chordal_ratio(g: &Graph, q: i64, ray: &Ray, t: u32) -> Result<Rational> {
    let m = ray.point(t);
    let q = int(q);
    let num = chordal_inverse_power_coefficient(g, &m.add(&ray.step()), &q)?;
    let den = chordal_inverse_power_coefficient(g, &m, &q)?;
    if den.is_zero() {
        return Err(Error::InvalidArgument(format!("coefficient at {m} vanishes")));
    }
    Ok(num / den)
}
