//! The full certification run for one graph product, and the standard
//! instances it is exercised on.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::ball::enumerate_ball;
use super::checks::{
    build_kernel_matrices, check_bounded_length_growth, check_cnd, check_coset_stability, check_degeneration,
    check_invariance, check_kernel_identity, check_pointwise_limit, check_properness, check_restriction,
    check_schoenberg, check_vanishing, Properness,
};
use super::report::CertReport;
use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::group::GroupKind;
use crate::kernel::Glued;

pub const DEFAULT_RADIUS: usize = 3;
pub const DEFAULT_CAP: usize = 300;
pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_T_LIST: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 5.0];
pub const DEFAULT_N_LIST: [f64; 5] = [1.0, 2.0, 5.0, 10.0, 100.0];
pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_SEED: u64 = 42;

/// Nontrivial vertex-group elements checked against `phi_Gamma = 1 + phi_v`.
pub const RESTRICTION_SAMPLES: usize = 50;
/// Powers `a^1 .. a^k` used for the bounded-length properness case.
pub const GROWTH_POWERS: usize = 50;
/// Slack allowed in the pointwise-limit bound.
pub const POINTWISE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SuiteParams {
    pub radius: usize,
    pub cap: usize,
    pub tol: f64,
    pub t_list: Vec<f64>,
    pub n_list: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            radius: DEFAULT_RADIUS,
            cap: DEFAULT_CAP,
            tol: DEFAULT_TOL,
            t_list: DEFAULT_T_LIST.to_vec(),
            n_list: DEFAULT_N_LIST.to_vec(),
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

/// One JSON document per run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub suite: String,
    pub graph: GraphSummary,
    pub vertex_groups: Vec<String>,
    pub radius: usize,
    pub n_elements: usize,
    pub truncated: bool,
    pub parameters: SuiteParams,
    pub checks: Vec<CertReport>,
    pub pass: bool,
}

impl RunReport {
    pub fn failures(&self) -> impl Iterator<Item = &CertReport> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Plain-text table, one row per check.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "suite {}  groups [{}]  edges {:?}\nball radius {}: {} elements{}\n",
            self.suite,
            self.vertex_groups.join(", "),
            self.graph.edges,
            self.radius,
            self.n_elements,
            if self.truncated { " (truncated)" } else { "" }
        );
        out.push_str(&format!(
            "{:<34} {:>5} {:>14} {:>14} {:>9}  {}\n",
            "check", "size", "metric", "threshold", "ms", "result"
        ));
        for c in &self.checks {
            let name = if c.instance.is_empty() {
                c.name.clone()
            } else {
                format!("{} [{}]", c.name, c.instance)
            };
            out.push_str(&format!(
                "{:<34} {:>5} {:>14.6e} {:>14.6e} {:>9.1}  {}\n",
                name,
                c.size,
                c.metric,
                c.threshold,
                c.ms,
                if c.pass { "PASS" } else { "FAIL" }
            ));
        }
        out.push_str(if self.pass { "all checks passed\n" } else { "SOME CHECKS FAILED\n" });
        out
    }
}

impl SuiteParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameter(m.to_string()));
        if self.cap == 0 {
            return bad("cap must be positive");
        }
        if self.tol.is_nan() || self.tol < 0.0 {
            return bad("tol must be nonnegative");
        }
        if self.t_list.is_empty() || self.t_list.iter().any(|&t| t.is_nan() || t <= 0.0) {
            return bad("t_list must be nonempty and positive");
        }
        if self.n_list.is_empty() || self.n_list.iter().any(|&n| n.is_nan() || n <= 0.0) || self.n_list.windows(2).any(|w| w[0] >= w[1]) {
            return bad("n_list must be nonempty, positive and increasing");
        }
        if self.samples == 0 {
            return bad("samples must be positive");
        }
        Ok(())
    }
}

/// Runs every applicable check for `graph`. A truncated ball is recorded but
/// does not fail the run.
pub fn run_suite(name: &str, graph: &GraphSpec, params: &SuiteParams) -> Result<RunReport> {
    params.validate()?;
    if graph.vertex_count() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let ball = enumerate_ball(graph, params.radius, params.cap)?;
    let mut checks = Vec::new();

    for kernel in build_kernel_matrices(graph, &ball, &Glued::ALL)? {
        let cnd = check_cnd(&kernel.matrix, params.tol)?.with_instance(kernel.function.name());
        let passed = cnd.pass;
        checks.push(cnd);
        if passed {
            for r in check_schoenberg(&kernel.matrix, &params.t_list, params.tol)? {
                checks.push(r.with_instance(kernel.function.name()));
            }
        }
    }

    checks.push(check_invariance(graph, params.samples, params.seed)?);
    checks.push(check_kernel_identity(graph, params.samples, params.seed)?);
    checks.push(check_restriction(graph, RESTRICTION_SAMPLES, params.seed)?);
    checks.push(check_coset_stability(graph, params.samples, params.seed)?);
    checks.push(check_pointwise_limit(&ball, &params.n_list, POINTWISE_TOLERANCE)?);

    let start = Instant::now();
    let profile = Properness::from_ball(&ball);
    checks.push(check_properness(&profile).timed(start));
    if graph.has_infinite_group() {
        for &n in &params.n_list {
            checks.push(check_vanishing(&profile, n));
        }
    }
    for v in 0..graph.vertex_count() {
        if !graph.groups()[v].is_finite() {
            checks.push(check_bounded_length_growth(graph, v, GROWTH_POWERS)?);
        }
    }
    if graph.is_edgeless() || graph.is_complete() {
        checks.push(check_degeneration(graph, &ball)?);
    }

    let pass = checks.iter().all(|c| c.pass);
    Ok(RunReport {
        suite: name.to_string(),
        graph: GraphSummary {
            vertices: graph.vertex_count(),
            edges: graph.edges().iter().map(|&(a, b)| [a, b]).collect(),
        },
        vertex_groups: graph.groups().iter().map(|g| g.to_string()).collect(),
        radius: params.radius,
        n_elements: ball.len(),
        truncated: ball.truncated,
        parameters: params.clone(),
        checks,
        pass,
    })
}

/// The six graph shapes of the standard suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Edgeless2,
    Edge2,
    Path3,
    Square4,
    Pentagon5,
    Complete3,
}

impl Shape {
    pub const ALL: [Shape; 6] = [
        Shape::Edgeless2,
        Shape::Edge2,
        Shape::Path3,
        Shape::Square4,
        Shape::Pentagon5,
        Shape::Complete3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Edgeless2 => "edgeless-2",
            Shape::Edge2 => "edge-2",
            Shape::Path3 => "path-3",
            Shape::Square4 => "square-4",
            Shape::Pentagon5 => "pentagon-5",
            Shape::Complete3 => "complete-3",
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            Shape::Edgeless2 | Shape::Edge2 => 2,
            Shape::Path3 | Shape::Complete3 => 3,
            Shape::Square4 => 4,
            Shape::Pentagon5 => 5,
        }
    }

    pub fn build(self, groups: Vec<GroupKind>) -> Result<GraphSpec> {
        match self {
            Shape::Edgeless2 => GraphSpec::edgeless(groups),
            Shape::Edge2 | Shape::Complete3 => GraphSpec::complete(groups),
            Shape::Path3 => GraphSpec::path(groups),
            Shape::Square4 | Shape::Pentagon5 => GraphSpec::cycle(groups),
        }
    }
}

/// Vertex-group assignments of the standard suite: all `Z/2`, all `Z`, and
/// two rotations of `Z/2, Z/3, Z, F2`.
pub fn standard_assignments(vertices: usize) -> Vec<(&'static str, Vec<GroupKind>)> {
    let menu = [
        GroupKind::Cyclic(2),
        GroupKind::Cyclic(3),
        GroupKind::Integers,
        GroupKind::Free(2),
    ];
    let rotate = |offset: usize| (0..vertices).map(|v| menu[(v + offset) % menu.len()]).collect();
    vec![
        ("coxeter", vec![GroupKind::Cyclic(2); vertices]),
        ("artin", vec![GroupKind::Integers; vertices]),
        ("mixed", rotate(0)),
        ("mixed-shifted", rotate(2)),
    ]
}

/// Every (shape, assignment) pair, named `shape/assignment`.
pub fn standard_instances() -> Vec<(String, GraphSpec)> {
    Shape::ALL
        .iter()
        .flat_map(|&shape| {
            standard_assignments(shape.vertex_count())
                .into_iter()
                .map(move |(label, groups)| {
                    let graph = shape.build(groups).expect("standard shapes are valid");
                    (format!("{}/{}", shape.name(), label), graph)
                })
        })
        .collect()
}
