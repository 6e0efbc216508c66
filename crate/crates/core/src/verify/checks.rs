//! Numerical certification of the glued functions on finite samples.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::ball::{generator_syllables, Ball};
use super::report::CertReport;
use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::group::VertexElement;
use crate::kernel::{embedding_kernel, phi_gamma, phi_tilde, schoenberg_transform, Glued};
use crate::linalg::{symmetric_eigenvalues, Matrix};
use crate::word::{NormalForm, Syllable};

/// Absolute tolerance for kernel identities. All values involved are
/// half-integers, so any deviation at all indicates a bug.
pub const KERNEL_TOLERANCE: f64 = 1e-10;

/// Longest random generator word used when sampling elements.
pub const SAMPLE_WORD_LENGTH: usize = 6;

/// `K[i][j] = f(g_j^-1 g_i)` over a list of elements.
#[derive(Clone, Debug)]
pub struct KernelMatrix<'a> {
    pub function: Glued,
    pub elements: &'a [NormalForm],
    pub matrix: Matrix,
}

pub fn build_kernel_matrix<'a>(graph: &GraphSpec, ball: &'a Ball, function: Glued) -> Result<KernelMatrix<'a>> {
    Ok(build_kernel_matrices(graph, ball, &[function])?.remove(0))
}

/// Builds one matrix per function, sharing the `g_j^-1 g_i` products. Every
/// glued function is symmetric under inversion, so only `j <= i` is
/// computed.
pub fn build_kernel_matrices<'a>(graph: &GraphSpec, ball: &'a Ball, functions: &[Glued]) -> Result<Vec<KernelMatrix<'a>>> {
    let elements = &ball.elements[..];
    let n = elements.len();
    let inverses = elements
        .iter()
        .map(|g| graph.inverse(g))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<Vec<Vec<f64>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let diff = graph.multiply(&inverses[j], &elements[i])?;
                    Ok(functions.iter().map(|f| f.evaluate(&diff)).collect())
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    Ok(functions
        .iter()
        .enumerate()
        .map(|(k, &function)| {
            let mut matrix = Matrix::zeros(n);
            for (i, row) in rows.iter().enumerate() {
                for (j, values) in row.iter().enumerate() {
                    matrix.set(i, j, values[k]);
                    matrix.set(j, i, values[k]);
                }
            }
            KernelMatrix {
                function,
                elements,
                matrix,
            }
        })
        .collect())
}

/// Passes iff the least eigenvalue is at least `-tol (1 + max |M_ij|)`.
pub fn check_psd(m: &Matrix, tol: f64) -> Result<CertReport> {
    let start = Instant::now();
    let eigenvalues = symmetric_eigenvalues(m)?;
    let min = eigenvalues.first().copied().unwrap_or(0.0);
    let threshold = -tol * (1.0 + m.max_abs());
    Ok(CertReport::new("psd", m.size(), min, threshold, tol, min >= threshold).timed(start))
}

/// Passes iff `P M P` has no eigenvalue above `tol (1 + max |M_ij|)`, i.e.
/// `c^T M c <= 0` whenever the entries of `c` sum to zero.
pub fn check_cnd(m: &Matrix, tol: f64) -> Result<CertReport> {
    let start = Instant::now();
    if !m.is_symmetric(1e-12) {
        return Err(Error::NotSymmetric);
    }
    let eigenvalues = symmetric_eigenvalues(&m.centered())?;
    let max = eigenvalues.last().copied().unwrap_or(0.0);
    let threshold = tol * (1.0 + m.max_abs());
    Ok(CertReport::new("cnd", m.size(), max, threshold, tol, max <= threshold).timed(start))
}

/// PSD check of `exp(-t M)` for each `t`.
pub fn check_schoenberg(m: &Matrix, t_list: &[f64], tol: f64) -> Result<Vec<CertReport>> {
    if t_list.is_empty() {
        return Err(Error::InvalidParameter("t_list must not be empty".into()));
    }
    if !m.has_zero_diagonal() {
        return Err(Error::InvalidParameter(
            "Schoenberg check needs a zero diagonal".into(),
        ));
    }
    t_list
        .iter()
        .map(|&t| {
            let start = Instant::now();
            let report = check_psd(&schoenberg_transform(m, t)?, tol)?;
            Ok(CertReport {
                name: format!("schoenberg t={t}"),
                ..report
            }
            .timed(start))
        })
        .collect()
}

/// Random element: product of up to `max_len` uniformly chosen generators.
pub fn random_element(graph: &GraphSpec, rng: &mut impl Rng, max_len: usize) -> Result<NormalForm> {
    let generators = generator_syllables(graph);
    let len = rng.gen_range(0..=max_len);
    let word: Vec<Syllable> = (0..len)
        .map(|_| generators[rng.gen_range(0..generators.len())].clone())
        .collect();
    graph.normalize(&word)
}

fn sample_triples(graph: &GraphSpec, samples: usize, seed: u64) -> Result<Vec<[NormalForm; 3]>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            Ok([
                random_element(graph, &mut rng, SAMPLE_WORD_LENGTH)?,
                random_element(graph, &mut rng, SAMPLE_WORD_LENGTH)?,
                random_element(graph, &mut rng, SAMPLE_WORD_LENGTH)?,
            ])
        })
        .collect()
}

/// Left invariance `k(fg, fh) = k(g, h)` on seeded random triples.
pub fn check_invariance(graph: &GraphSpec, samples: usize, seed: u64) -> Result<CertReport> {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for [f, g, h] in sample_triples(graph, samples, seed)? {
        let fg = graph.multiply(&f, &g)?;
        let fh = graph.multiply(&f, &h)?;
        let lhs = embedding_kernel(graph, &fg, &fh)?;
        let rhs = embedding_kernel(graph, &g, &h)?;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(CertReport::new("invariance", samples, worst, KERNEL_TOLERANCE, KERNEL_TOLERANCE, worst <= KERNEL_TOLERANCE)
        .with_seed(seed)
        .timed(start))
}

/// `k(g, h) = phi~(h^-1 g)` and `k(g, e) = phi~(g)` on the same triples
/// [`check_invariance`] draws.
pub fn check_kernel_identity(graph: &GraphSpec, samples: usize, seed: u64) -> Result<CertReport> {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let identity = NormalForm::identity();
    for [_, g, h] in sample_triples(graph, samples, seed)? {
        let diff = graph.multiply(&graph.inverse(&h)?, &g)?;
        worst = worst.max((embedding_kernel(graph, &g, &h)? - phi_tilde(&diff)).abs());
        worst = worst.max((embedding_kernel(graph, &g, &identity)? - phi_tilde(&g)).abs());
    }
    Ok(CertReport::new("kernel_identity", samples, worst, KERNEL_TOLERANCE, KERNEL_TOLERANCE, worst <= KERNEL_TOLERANCE)
        .with_seed(seed)
        .timed(start))
}

/// `phi_Gamma(a) = 1 + phi_v(a)` for nontrivial `a` in a vertex group.
/// Vertices are visited round robin; `metric` counts mismatches.
pub fn check_restriction(graph: &GraphSpec, samples: usize, seed: u64) -> Result<CertReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    let n = graph.vertex_count();
    for k in 0..samples {
        let v = k % n;
        let group = graph.group(v)?;
        let generators = group.generators();
        let a = loop {
            let len = rng.gen_range(1..=SAMPLE_WORD_LENGTH);
            let a = (0..len).try_fold(group.identity(), |acc, _| {
                group.multiply(&acc, &generators[rng.gen_range(0..generators.len())])
            })?;
            if !a.is_identity() {
                break a;
            }
        };
        let g = graph.normalize(&[Syllable::new(v, a.clone())])?;
        if phi_gamma(&g) != 1.0 + group.phi(&a) {
            failures += 1;
        }
    }
    Ok(CertReport::new("restriction", samples, failures as f64, 0.0, 0.0, failures == 0)
        .with_seed(seed)
        .timed(start))
}

/// `coset_representative(g k, v) = coset_representative(g, v)` for random
/// `g` and `k` a product of at most three generators from groups in `st(v)`.
pub fn check_coset_stability(graph: &GraphSpec, samples: usize, seed: u64) -> Result<CertReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = generator_syllables(graph);
    let mut failures = 0usize;
    for _ in 0..samples {
        let g = random_element(graph, &mut rng, SAMPLE_WORD_LENGTH)?;
        let v = rng.gen_range(0..graph.vertex_count());
        let local: Vec<&Syllable> = all.iter().filter(|s| graph.in_star(v, s.vertex)).collect();
        let k_len = rng.gen_range(0..=3);
        let k: Vec<Syllable> = (0..k_len)
            .map(|_| local[rng.gen_range(0..local.len())].clone())
            .collect();
        let gk = graph.multiply(&g, &graph.normalize(&k)?)?;
        if graph.coset_representative(&gk, v)? != graph.coset_representative(&g, v)? {
            failures += 1;
        }
    }
    Ok(CertReport::new("coset_stability", samples, failures as f64, 0.0, 0.0, failures == 0)
        .with_seed(seed)
        .timed(start))
}

/// Finite proxy for `exp(-phi_Gamma / n) -> 1` pointwise: each sequence is
/// nondecreasing along `n_list` and at the largest `n` lies within
/// `phi_Gamma(g) / n + tol` of 1. `metric` is the least value at the largest
/// `n`.
pub fn check_pointwise_limit(ball: &Ball, n_list: &[f64], tol: f64) -> Result<CertReport> {
    let start = Instant::now();
    if n_list.is_empty() || n_list.iter().any(|&n| n.is_nan() || n <= 0.0) {
        return Err(Error::InvalidParameter("n_list must be nonempty and positive".into()));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("n_list must be increasing".into()));
    }
    let n_max = *n_list.last().unwrap();
    let mut pass = true;
    let mut least = 1.0f64;
    for g in &ball.elements {
        let phi = phi_gamma(g);
        let values: Vec<f64> = n_list.iter().map(|n| (-phi / n).exp()).collect();
        pass &= values.windows(2).all(|w| w[0] <= w[1]);
        let last = *values.last().unwrap();
        pass &= 1.0 - last <= phi / n_max + tol;
        least = least.min(last);
    }
    Ok(CertReport::new("pointwise_limit", ball.len(), least, 1.0, tol, pass).timed(start))
}

/// Minimum of `phi_Gamma` over one sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereStat {
    pub radius: usize,
    pub min_phi: f64,
    pub count: usize,
    /// False for a sphere cut short by the ball cap.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Properness {
    pub spheres: Vec<SphereStat>,
    /// Sphere minima are nondecreasing over the complete spheres.
    pub monotone: bool,
    pub truncated: bool,
}

impl Properness {
    pub fn from_ball(ball: &Ball) -> Self {
        let complete_radius = ball.complete_radius();
        let spheres: Vec<SphereStat> = (1..=ball.radius)
            .filter_map(|r| {
                let phis: Vec<f64> = ball.sphere(r).map(|i| phi_gamma(&ball.elements[i])).collect();
                (!phis.is_empty()).then(|| SphereStat {
                    radius: r,
                    min_phi: phis.iter().copied().fold(f64::INFINITY, f64::min),
                    count: phis.len(),
                    complete: r <= complete_radius,
                })
            })
            .collect();
        let complete: Vec<f64> = spheres.iter().filter(|s| s.complete).map(|s| s.min_phi).collect();
        Properness {
            monotone: complete.windows(2).all(|w| w[0] <= w[1]),
            spheres,
            truncated: ball.truncated,
        }
    }

    /// Largest decrease of the sphere minimum between consecutive complete
    /// spheres; zero for a monotone profile.
    pub fn worst_drop(&self) -> f64 {
        let complete: Vec<f64> = self.spheres.iter().filter(|s| s.complete).map(|s| s.min_phi).collect();
        complete.windows(2).fold(0.0, |m, w| m.max(w[0] - w[1]))
    }
}

/// Sphere-by-sphere minima of `phi_Gamma` for `1 <= r <= radius_max`. Empty
/// spheres (a finite group exhausted) are omitted.
pub fn properness_profile(graph: &GraphSpec, radius_max: usize, cap: usize) -> Result<Properness> {
    if radius_max == 0 {
        return Err(Error::InvalidParameter("radius_max must be at least 1".into()));
    }
    Ok(Properness::from_ball(&super::ball::enumerate_ball(graph, radius_max, cap)?))
}

pub fn check_properness(profile: &Properness) -> CertReport {
    let drop = profile.worst_drop();
    CertReport::new("properness", profile.spheres.len(), drop, 0.0, 0.0, profile.monotone)
}

/// For fixed `n`, the sphere maxima of `exp(-phi_Gamma / n)` do not increase
/// with the radius.
pub fn check_vanishing(profile: &Properness, n: f64) -> CertReport {
    let maxima: Vec<f64> = profile
        .spheres
        .iter()
        .filter(|s| s.complete)
        .map(|s| (-s.min_phi / n).exp())
        .collect();
    let rise = maxima.windows(2).fold(0.0f64, |m, w| m.max(w[1] - w[0]));
    CertReport::new(format!("vanishing n={n}"), maxima.len(), rise, 0.0, 0.0, rise <= 0.0)
}

/// Bounded reduced length with growing word length: powers `a^k` of a
/// generator of an infinite vertex group satisfy `phi_Gamma = 1 + phi_v` and
/// grow strictly with `k`.
pub fn check_bounded_length_growth(graph: &GraphSpec, vertex: usize, max_power: usize) -> Result<CertReport> {
    let start = Instant::now();
    let group = graph.group(vertex)?;
    if group.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "vertex {vertex} carries the finite group {group}"
        )));
    }
    let generator = group.generators().remove(0);
    let mut power = group.identity();
    let mut failures = 0usize;
    let mut previous = 0.0;
    for _ in 0..max_power {
        power = group.multiply(&power, &generator)?;
        let g = graph.normalize(&[Syllable::new(vertex, power.clone())])?;
        let value = phi_gamma(&g);
        if value != 1.0 + group.phi(&power) || value <= previous {
            failures += 1;
        }
        previous = value;
    }
    Ok(CertReport::new(format!("bounded_length_growth v{vertex}"), max_power, failures as f64, 0.0, 0.0, failures == 0)
        .timed(start))
}

/// Free-product normal form of a word, computed with a stack and no
/// reference to the word engine.
pub fn free_product_normal_form(graph: &GraphSpec, word: &[Syllable]) -> Result<Vec<Syllable>> {
    let mut stack: Vec<Syllable> = Vec::new();
    for s in word {
        if s.element.is_identity() {
            continue;
        }
        match stack.last_mut() {
            Some(top) if top.vertex == s.vertex => {
                let product = graph.group(s.vertex)?.multiply(&top.element, &s.element)?;
                if product.is_identity() {
                    stack.pop();
                } else {
                    top.element = product;
                }
            }
            _ => stack.push(s.clone()),
        }
    }
    Ok(stack)
}

/// Componentwise evaluation of a word in the direct product of the vertex
/// groups.
pub fn direct_product_tuple(graph: &GraphSpec, word: &[Syllable]) -> Result<Vec<VertexElement>> {
    let mut tuple: Vec<VertexElement> = graph.groups().iter().map(|g| g.identity()).collect();
    for s in word {
        tuple[s.vertex] = graph.group(s.vertex)?.multiply(&tuple[s.vertex], &s.element)?;
    }
    Ok(tuple)
}

fn tuple_word(tuple: &[VertexElement]) -> Vec<Syllable> {
    tuple
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_identity())
        .map(|(v, a)| Syllable::new(v, a.clone()))
        .collect()
}

/// How many ball elements the product check of [`check_degeneration`] pairs
/// up.
const DEGENERATION_PAIRS: usize = 40;

/// Cross-checks the two extreme graphs against independent arithmetic.
///
/// Edgeless: every normal form equals the free-product normal form of its
/// spelling and alternates vertices. Complete: normal forms are the sorted
/// nontrivial coordinates of the tuple of the spelling, distinct elements
/// have distinct tuples, and multiplication is componentwise. A one-vertex
/// graph is both, and also gets `phi_Gamma = 1 + phi_v` off the identity.
pub fn check_degeneration(graph: &GraphSpec, ball: &Ball) -> Result<CertReport> {
    let start = Instant::now();
    let edgeless = graph.is_edgeless();
    let complete = graph.is_complete();
    if !edgeless && !complete {
        return Err(Error::InvalidParameter(
            "degeneration check needs an edgeless or complete graph".into(),
        ));
    }
    let mut failures = 0usize;
    if edgeless {
        for (g, spelling) in ball.elements.iter().zip(&ball.spellings) {
            let expected = free_product_normal_form(graph, spelling)?;
            let alternates = g.syllables().windows(2).all(|w| w[0].vertex != w[1].vertex);
            if g.syllables() != expected.as_slice() || !alternates {
                failures += 1;
            }
        }
    }
    if complete {
        let tuples = ball
            .spellings
            .iter()
            .map(|w| direct_product_tuple(graph, w))
            .collect::<Result<Vec<_>>>()?;
        for (g, tuple) in ball.elements.iter().zip(&tuples) {
            if g.syllables() != tuple_word(tuple).as_slice() {
                failures += 1;
            }
        }
        let distinct: HashSet<&Vec<VertexElement>> = tuples.iter().collect();
        failures += ball.len() - distinct.len();
        let m = ball.len().min(DEGENERATION_PAIRS);
        for i in 0..m {
            for j in 0..m {
                let product = graph.multiply(&ball.elements[i], &ball.elements[j])?;
                let expected = tuples[i]
                    .iter()
                    .zip(&tuples[j])
                    .enumerate()
                    .map(|(v, (a, b))| graph.groups()[v].multiply(a, b))
                    .collect::<Result<Vec<_>>>()?;
                if product.syllables() != tuple_word(&expected).as_slice() {
                    failures += 1;
                }
            }
        }
    }
    if graph.vertex_count() == 1 {
        let group = graph.group(0)?;
        for g in ball.elements.iter().filter(|g| !g.is_identity()) {
            if phi_gamma(g) != 1.0 + group.phi(&g.syllables()[0].element) {
                failures += 1;
            }
        }
    }
    let kind = match (edgeless, complete) {
        (true, true) => "degeneration single",
        (true, false) => "degeneration free",
        _ => "degeneration direct",
    };
    Ok(CertReport::new(kind, ball.len(), failures as f64, 0.0, 0.0, failures == 0).timed(start))
}
