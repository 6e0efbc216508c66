//! JSON run configuration.
//!
//! ```json
//! {
//!   "version": 1,
//!   "vertices": [{"id": 0, "group": {"kind": "cyclic", "n": 2}},
//!                {"id": 1, "group": {"kind": "free", "rank": 2}}],
//!   "edges": [[0, 1]],
//!   "suite": {"radius": 3, "cap": 300, "tol": 1e-8, "t_list": [0.1, 0.5, 1, 2, 5],
//!             "n_list": [1, 2, 5, 10, 100], "samples": 200, "seed": 42},
//!   "output": "report.json"
//! }
//! ```
//!
//! Group kinds are `cyclic` (with `n`), `integers`, and `free` (with
//! `rank`). Every suite field is optional; unknown keys are rejected.

use std::fmt;
use std::path::PathBuf;

use graphprod::verify::suite::{
    DEFAULT_CAP, DEFAULT_N_LIST, DEFAULT_RADIUS, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TOL, DEFAULT_T_LIST,
};
use graphprod::verify::SuiteParams;
use graphprod::{GraphSpec, GroupKind};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub graph: GraphSpec,
    pub suite: SuiteParams,
    pub output: Option<PathBuf>,
}

/// Every problem found in a configuration, not just the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigErrors(pub Vec<String>);

impl fmt::Display for ConfigErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid configuration:")?;
        for e in &self.0 {
            write!(f, "\n  - {e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ConfigErrors {}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    version: u32,
    vertices: Vec<RawVertex>,
    #[serde(default)]
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    suite: RawSuite,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<PathBuf>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    id: usize,
    group: RawGroup,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<u32>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSuite {
    #[serde(skip_serializing_if = "Option::is_none")]
    radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_list: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_list: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

fn parse_group(id: usize, raw: &RawGroup, errors: &mut Vec<String>) -> Option<GroupKind> {
    let kind = match (raw.kind.as_str(), raw.n, raw.rank) {
        ("cyclic", Some(n), None) => GroupKind::Cyclic(n),
        ("cyclic", None, _) => {
            errors.push(format!("vertex {id}: cyclic group needs an order `n`"));
            return None;
        }
        ("integers", None, None) => GroupKind::Integers,
        ("free", None, Some(rank)) => GroupKind::Free(rank),
        ("free", _, None) => {
            errors.push(format!("vertex {id}: free group needs a `rank`"));
            return None;
        }
        ("cyclic" | "integers" | "free", _, _) => {
            errors.push(format!(
                "vertex {id}: unexpected parameter for group kind `{}`",
                raw.kind
            ));
            return None;
        }
        (other, _, _) => {
            errors.push(format!(
                "vertex {id}: unknown group kind `{other}` (expected cyclic, integers or free)"
            ));
            return None;
        }
    };
    if let Err(e) = kind.validate() {
        errors.push(format!("vertex {id}: {e}"));
        return None;
    }
    Some(kind)
}

fn build_suite(raw: &RawSuite, errors: &mut Vec<String>) -> SuiteParams {
    let suite = SuiteParams {
        radius: raw.radius.unwrap_or(DEFAULT_RADIUS),
        cap: raw.cap.unwrap_or(DEFAULT_CAP),
        tol: raw.tol.unwrap_or(DEFAULT_TOL),
        t_list: raw.t_list.clone().unwrap_or_else(|| DEFAULT_T_LIST.to_vec()),
        n_list: raw.n_list.clone().unwrap_or_else(|| DEFAULT_N_LIST.to_vec()),
        samples: raw.samples.unwrap_or(DEFAULT_SAMPLES),
        seed: raw.seed.unwrap_or(DEFAULT_SEED),
    };
    if suite.radius == 0 {
        errors.push("suite.radius must be positive".into());
    }
    if suite.cap == 0 {
        errors.push("suite.cap must be positive".into());
    }
    // Zero is allowed: it demands exact eigenvalue signs.
    if !(suite.tol >= 0.0 && suite.tol.is_finite()) {
        errors.push("suite.tol must be a nonnegative number".into());
    }
    if suite.t_list.is_empty() || suite.t_list.iter().any(|&t| !(t > 0.0 && t.is_finite())) {
        errors.push("suite.t_list must be a nonempty list of positive numbers".into());
    }
    if suite.n_list.is_empty()
        || suite.n_list.iter().any(|&n| !(n > 0.0 && n.is_finite()))
        || suite.n_list.windows(2).any(|w| w[0] >= w[1])
    {
        errors.push("suite.n_list must be a nonempty increasing list of positive numbers".into());
    }
    if suite.samples == 0 {
        errors.push("suite.samples must be positive".into());
    }
    suite
}

/// Parses and validates a configuration, reporting all semantic problems at
/// once. Syntax errors stop at the first.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigErrors> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| ConfigErrors(vec![format!("malformed config: {e}")]))?;
    let mut errors = Vec::new();

    if raw.version != SCHEMA_VERSION {
        errors.push(format!(
            "unsupported version {} (expected {SCHEMA_VERSION})",
            raw.version
        ));
    }

    let n = raw.vertices.len();
    if n == 0 {
        errors.push("at least one vertex is required".into());
    }
    let mut groups: Vec<Option<GroupKind>> = vec![None; n];
    let mut seen = vec![false; n];
    for v in &raw.vertices {
        let group = parse_group(v.id, &v.group, &mut errors);
        if v.id >= n {
            errors.push(format!("vertex id {} out of range 0..{n}", v.id));
        } else if seen[v.id] {
            errors.push(format!("vertex id {} listed twice", v.id));
        } else {
            seen[v.id] = true;
            groups[v.id] = group;
        }
    }

    let mut edges = Vec::with_capacity(raw.edges.len());
    let mut listed = std::collections::HashSet::new();
    for &[a, b] in &raw.edges {
        if a == b {
            errors.push(format!("loop edge [{a}, {b}]"));
        } else if a >= n || b >= n {
            errors.push(format!("edge [{a}, {b}] has an endpoint outside 0..{n}"));
        } else if !listed.insert((a.min(b), a.max(b))) {
            errors.push(format!("duplicate edge [{a}, {b}]"));
        } else {
            edges.push((a, b));
        }
    }

    let suite = build_suite(&raw.suite, &mut errors);

    if !errors.is_empty() {
        return Err(ConfigErrors(errors));
    }
    let groups: Vec<GroupKind> = groups.into_iter().map(|g| g.expect("validated above")).collect();
    let graph = GraphSpec::new(groups, &edges).map_err(|e| ConfigErrors(vec![e.to_string()]))?;
    Ok(RunConfig {
        graph,
        suite,
        output: raw.output,
    })
}

/// Serializes a configuration, writing every suite field explicitly.
pub fn emit_config(config: &RunConfig) -> String {
    let raw = RawConfig {
        version: SCHEMA_VERSION,
        vertices: config
            .graph
            .groups()
            .iter()
            .enumerate()
            .map(|(id, g)| RawVertex {
                id,
                group: match *g {
                    GroupKind::Cyclic(n) => RawGroup {
                        kind: "cyclic".into(),
                        n: Some(n),
                        rank: None,
                    },
                    GroupKind::Integers => RawGroup {
                        kind: "integers".into(),
                        n: None,
                        rank: None,
                    },
                    GroupKind::Free(rank) => RawGroup {
                        kind: "free".into(),
                        n: None,
                        rank: Some(rank),
                    },
                },
            })
            .collect(),
        edges: config.graph.edges().iter().map(|&(a, b)| [a, b]).collect(),
        suite: RawSuite {
            radius: Some(config.suite.radius),
            cap: Some(config.suite.cap),
            tol: Some(config.suite.tol),
            t_list: Some(config.suite.t_list.clone()),
            n_list: Some(config.suite.n_list.clone()),
            samples: Some(config.suite.samples),
            seed: Some(config.suite.seed),
        },
        output: config.output.clone(),
    };
    serde_json::to_string_pretty(&raw).expect("config serializes")
}

/// Human-readable list of defaults, shared by `--help` and the README.
pub fn defaults_help() -> String {
    format!(
        "Suite defaults: radius {DEFAULT_RADIUS}, cap {DEFAULT_CAP}, tol {DEFAULT_TOL:e}, \
         t_list {DEFAULT_T_LIST:?}, n_list {DEFAULT_N_LIST:?}, samples {DEFAULT_SAMPLES}, seed {DEFAULT_SEED}"
    )
}
