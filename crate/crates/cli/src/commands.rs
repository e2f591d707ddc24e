//   Copyright 2026 plvo developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.


use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use plvo_core::num::Rational;
use plvo_core::oracle::{self, GridSpec, Label};
use plvo_core::reduction::{self, PlpInstance};
use plvo_core::solver::{self, SolutionKind, SolveOptions, WeakMethod};
use serde::Serialize;
use serde_json::{json, Value};

use crate::format::{self, InstanceFile, SolutionFile};
use crate::{to_json, Failure};

#[derive(Debug, Parser)]
#[command(name = "plvo", version, about = "Exact Pareto and weak Pareto sets of piecewise linear problems")]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check coverage, consistency and canonical form.
    Validate { instance: PathBuf },
    /// Rewrite onto cells with disjoint interiors.
    Refine { instance: PathBuf },
    /// Print the reduced problem data.
    Reduce { instance: PathBuf },
    /// Compute the solution and value sets.
    Solve(SolveArgs),
    /// Compare computed sets against brute force on a grid.
    OracleCheck(OracleArgs),
    /// List the faces of one feasible cell.
    Faces {
        instance: PathBuf,
        #[arg(long)]
        cell: usize,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub instance: PathBuf,
    #[arg(long, conflicts_with = "pareto", required_unless_present = "pareto")]
    pub weak: bool,
    #[arg(long)]
    pub pareto: bool,
    /// Weak set by scalarization over the convex hull of the images.
    #[arg(long, requires = "weak")]
    pub scalarize: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub instance: PathBuf,
    #[arg(long, default_value_t = 4)]
    pub denominator: u32,
    /// Box `lo:hi` on every axis, e.g. `-2:3/2`.
    #[arg(long = "box", value_name = "LO:HI", allow_hyphen_values = true)]
    pub bounds: Option<String>,
}

/// Read an instance from a path, `-` meaning stdin.
pub fn read_instance(path: &Path) -> Result<PlpInstance, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    parse_instance(&text)
}

pub fn parse_instance(text: &str) -> Result<PlpInstance, Failure> {
    let file: InstanceFile = serde_json::from_str(text)?;
    file.to_core()
}

/// Run a command and return its output text with the exit code.
pub fn run(command: &Command) -> Result<(String, i32), Failure> {
    match command {
        Command::Validate { instance } => validate(&read_instance(instance)?),
        Command::Refine { instance } => {
            let inst = read_instance(instance)?;
            inst.check()?;
            Ok((to_json(&InstanceFile::from_core(&inst.canonicalize()?))?, 0))
        }
        Command::Reduce { instance } => Ok((reduce(&read_instance(instance)?)?, 0)),
        Command::Solve(args) => {
            let inst = read_instance(&args.instance)?;
            let kind = if args.pareto { SolutionKind::Pareto } else { SolutionKind::WeakPareto };
            let sol = solve(&inst, kind, args.scalarize)?;
            Ok((to_json(&SolutionFile::from_core(&sol))?, 0))
        }
        Command::OracleCheck(args) => Ok((oracle_check(&read_instance(&args.instance)?, args)?, 0)),
        Command::Faces { instance, cell } => Ok((faces(&read_instance(instance)?, *cell)?, 0)),
    }
}

/// Run and write the output where `cli` asks.
pub fn execute(cli: &Cli) -> Result<i32, Failure> {
    let (text, code) = run(&cli.command)?;
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(code)
}

pub fn solve(inst: &PlpInstance, kind: SolutionKind, scalarize: bool) -> Result<solver::PlpSolution, Failure> {
    inst.check()?;
    let weak_method = if scalarize { WeakMethod::Scalarization } else { WeakMethod::Difference };
    Ok(solver::solve(inst, kind, SolveOptions { weak_method, ..Default::default() })?)
}

fn vectors(vs: &[Vec<Rational>]) -> Vec<Vec<String>> {
    vs.iter().map(|v| format::vector(v)).collect()
}

fn validate(inst: &PlpInstance) -> Result<(String, i32), Failure> {
    let r = inst.validate();
    let space = inst.objective().common_linear_space().ok().map(|s| vectors(s.basis()));
    let report = json!({
        "valid": r.is_valid(),
        "canonical": r.is_canonical(),
        "uncovered": r.uncovered.as_deref().map(format::vector),
        "objective_conflicts": r.objective_conflicts,
        "constraint_conflicts": r.constraint_conflicts,
        "flat_cells": r.flat_cells,
        "overlapping_cells": r.overlapping_cells,
        "common_linear_space": space,
    });
    Ok((to_json(&report)?, if r.is_valid() { 0 } else { 2 }))
}

fn reduce(inst: &PlpInstance) -> Result<String, Failure> {
    inst.check()?;
    let red = reduction::reduce(inst)?;
    let empty: Vec<usize> = (0..inst.m()).filter(|&i| red.cells_hat[i].is_empty()).collect();
    let report = json!({
        "dim_x1": red.x1.dim(),
        "x1_basis": vectors(red.x1.basis()),
        "nu": red.nu(),
        "h": vectors(&red.h),
        "dual_basis": vectors(&red.dual_basis),
        "sigma": red.sigma(),
        "z": vectors(&red.z),
        "t_hat": vectors(red.t_hat.rows()),
        "int_nonempty": red.int_nonempty,
        "cone_condition": red.cone_condition,
        "t_hat_pointed": red.t_hat_pointed,
        "empty_reduced_cells": empty,
    });
    to_json(&report)
}

fn parse_box(s: &str) -> Result<(Rational, Rational), Failure> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| Failure::Parse(format!("box must be lo:hi, got {s:?}")))?;
    Ok((format::parse_rational(lo)?, format::parse_rational(hi)?))
}

fn label_name(l: Label) -> &'static str {
    match l {
        Label::Infeasible => "infeasible",
        Label::Pareto => "pareto",
        Label::WeakOnly => "weak_only",
        Label::Dominated => "dominated",
    }
}

#[derive(Serialize)]
struct OracleReport {
    agrees: bool,
    points: usize,
    feasible: usize,
    labels: BTreeMap<&'static str, usize>,
    pareto_violations: Vec<Vec<String>>,
    weak_violations: Vec<Vec<String>>,
    infeasible_members: Vec<Vec<String>>,
    lo: Vec<String>,
    hi: Vec<String>,
    denominator: u32,
}

fn oracle_check(inst: &PlpInstance, args: &OracleArgs) -> Result<String, Failure> {
    inst.check()?;
    let grid = match &args.bounds {
        Some(b) => {
            let (lo, hi) = parse_box(b)?;
            GridSpec::new(vec![lo; inst.p()], vec![hi; inst.p()], args.denominator)?
        }
        None => GridSpec::for_instance(inst, args.denominator)?,
    };
    let labels = oracle::classify_grid(inst, &grid)?;
    let pareto = solver::solve_pareto(inst)?;
    let weak = solver::solve_weak(inst)?;
    let r = oracle::check_agreement(&labels, Some(&pareto), Some(&weak));
    let mut counts: BTreeMap<&'static str, usize> =
        ["infeasible", "pareto", "weak_only", "dominated"].into_iter().map(|k| (k, 0)).collect();
    for (_, l) in &labels {
        *counts.entry(label_name(*l)).or_default() += 1;
    }
    to_json(&OracleReport {
        agrees: r.agrees(),
        points: r.points,
        feasible: r.feasible,
        labels: counts,
        pareto_violations: vectors(&r.pareto_violations),
        weak_violations: vectors(&r.weak_violations),
        infeasible_members: vectors(&r.infeasible_members),
        lo: format::vector(&grid.lo),
        hi: format::vector(&grid.hi),
        denominator: grid.denominator,
    })
}

fn faces(inst: &PlpInstance, cell: usize) -> Result<String, Failure> {
    let a = inst.feasible_cell(cell)?;
    let list: Vec<Value> = a
        .enumerate_exposed_faces()?
        .into_iter()
        .map(|(cert, face)| {
            json!({
                "active_rows": cert.active_rows,
                "dim": face.affine_dim(),
                "rows": format::rows(&face.canonicalize().sorted()),
            })
        })
        .collect();
    to_json(&json!({ "cell": cell, "rows": format::rows(&a), "faces": list }))
}
