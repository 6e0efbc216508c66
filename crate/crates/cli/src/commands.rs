use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use graphprod::kernel::{phi_gamma, phi_tilde};
use graphprod::verify::{enumerate_ball, run_suite, RunReport};
use graphprod::word::reduced_length;
use graphprod::GraphSpec;
use serde::Serialize;

use crate::config::RunConfig;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizeOutput {
    pub normal_form: String,
    pub reduced_length: usize,
}

impl NormalizeOutput {
    pub fn render(&self) -> String {
        format!("{}\nl_r = {}\n", self.normal_form, self.reduced_length)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhiOutput {
    pub normal_form: String,
    pub reduced_length: usize,
    pub phi_tilde: f64,
    pub phi_gamma: f64,
}

impl PhiOutput {
    pub fn render(&self) -> String {
        format!(
            "{}\nl_r = {}\nphi_tilde = {}\nphi_gamma = {}\n",
            self.normal_form, self.reduced_length, self.phi_tilde, self.phi_gamma
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallEntry {
    pub word_length: usize,
    pub reduced_length: usize,
    pub phi_gamma: f64,
    pub normal_form: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallOutput {
    pub radius: usize,
    pub truncated: bool,
    pub elements: Vec<BallEntry>,
}

impl BallOutput {
    pub fn render(&self) -> String {
        let mut out = format!(
            "ball of radius {}: {} elements{}\n{:>4} {:>4} {:>10}  normal form\n",
            self.radius,
            self.elements.len(),
            if self.truncated { " (truncated)" } else { "" },
            "|g|",
            "l_r",
            "phi_gamma"
        );
        for e in &self.elements {
            out.push_str(&format!(
                "{:>4} {:>4} {:>10}  {}\n",
                e.word_length, e.reduced_length, e.phi_gamma, e.normal_form
            ));
        }
        out
    }
}

pub fn normalize(graph: &GraphSpec, word: &str) -> Result<NormalizeOutput> {
    let g = graph.normalize(&graph.parse_word(word)?)?;
    Ok(NormalizeOutput {
        normal_form: g.to_string(),
        reduced_length: reduced_length(&g),
    })
}

pub fn phi(graph: &GraphSpec, word: &str) -> Result<PhiOutput> {
    let g = graph.normalize(&graph.parse_word(word)?)?;
    Ok(PhiOutput {
        normal_form: g.to_string(),
        reduced_length: reduced_length(&g),
        phi_tilde: phi_tilde(&g),
        phi_gamma: phi_gamma(&g),
    })
}

pub fn ball(graph: &GraphSpec, radius: usize, cap: usize) -> Result<BallOutput> {
    let ball = enumerate_ball(graph, radius, cap)?;
    let elements = ball
        .elements
        .iter()
        .zip(&ball.lengths)
        .map(|(g, &word_length)| BallEntry {
            word_length,
            reduced_length: reduced_length(g),
            phi_gamma: phi_gamma(g),
            normal_form: g.to_string(),
        })
        .collect();
    Ok(BallOutput {
        radius,
        truncated: ball.truncated,
        elements,
    })
}

/// Runs the suite and, when the configuration names an output path, writes
/// the JSON report there. The caller decides the exit status from
/// `RunReport::pass`.
pub fn verify(name: &str, config: &RunConfig) -> Result<RunReport> {
    if let Some(parent) = config.output.as_deref().and_then(Path::parent) {
        if !parent.as_os_str().is_empty() && !parent.is_dir() {
            bail!("output directory {} does not exist", parent.display());
        }
    }
    let report = run_suite(name, &config.graph, &config.suite)?;
    if let Some(path) = &config.output {
        write_report(&report, path)?;
    }
    Ok(report)
}

pub fn write_report(report: &RunReport, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(report)?;
    fs::write(path, json + "\n").with_context(|| format!("cannot write report to {}", path.display()))
}

pub fn read_report(path: &Path) -> Result<RunReport> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read report {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not a run report", path.display()))
}
