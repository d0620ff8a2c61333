//! `amf`: algebraic modular forms for finite subgroups of SU(2).

use clap::{Parser, Subcommand};
use modring::borelweil::Weight;
use modring::invariantforms::{
    build_group, invariant_spaces, is_invariant, molien_table, multiply_invariants_classical,
    verify_graded_ring, verify_path_equality, AbstractMultiplier, FiniteSubgroup, GroupName,
    RingCheck,
};
use modring::{with_group, GaussExt, Radical, Scalar};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{
    config_echo, invalid, strings, CheckRecord, CliError, CliResult, GlobalArgs, Report, Tool,
};

const MAX_MOLIEN: u32 = 200;
const MAX_WEIGHT: u32 = 60;
const MAX_RING: u32 = 24;
const MAX_PRODUCT: u32 = 48;

#[derive(Parser, Debug, Serialize)]
#[command(
    name = "amf",
    version,
    about = "Algebraic modular forms for finite subgroups of SU(2)"
)]
pub struct AmfCli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: AmfCommand,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum AmfCommand {
    /// Elements of the group as exact matrices.
    Group {
        /// Q8, 2T, 2O, 2I, cyclic(k) or binary_dihedral(k).
        #[arg(long)]
        group: String,
    },
    /// Invariant dimensions by the character sum, checked against Reynolds ranks.
    Molien {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max: u32,
    },
    /// Basis of the invariants of one weight.
    Invariants {
        #[arg(long)]
        group: String,
        #[arg(long)]
        weight: u32,
    },
    /// Product of two invariant basis elements along both routes.
    Multiply {
        #[arg(long)]
        group: String,
        /// Basis element as WEIGHT:INDEX.
        #[arg(long)]
        left: String,
        /// Basis element as WEIGHT:INDEX.
        #[arg(long)]
        right: String,
    },
    /// Graded-ring axioms and path equality on all basis elements.
    VerifyRing {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max: u32,
    },
}

impl Tool for AmfCli {
    const NAME: &'static str = "amf";

    fn global(&self) -> &GlobalArgs {
        &self.global
    }

    fn run(&self) -> CliResult<Report> {
        let (checks, data) = match &self.command {
            AmfCommand::Group { group } => {
                let g = group_arg(group)?;
                with_group!(&g, g => group_data(g))
            }
            AmfCommand::Molien { group, max } => {
                bounded("max", *max, MAX_MOLIEN)?;
                let g = group_arg(group)?;
                with_group!(&g, g => molien(g, *max)?)
            }
            AmfCommand::Invariants { group, weight } => {
                bounded("weight", *weight, MAX_WEIGHT)?;
                let g = group_arg(group)?;
                with_group!(&g, g => invariants(g, *weight)?)
            }
            AmfCommand::Multiply { group, left, right } => {
                let l = element_arg("left", left)?;
                let r = element_arg("right", right)?;
                bounded("left/right total weight", l.0 + r.0, MAX_PRODUCT)?;
                let g = group_arg(group)?;
                with_group!(&g, g => multiply(g, l, r)?)
            }
            AmfCommand::VerifyRing { group, max } => {
                bounded("max", *max, MAX_RING)?;
                let g = group_arg(group)?;
                with_group!(&g, g => verify_ring(g, *max)?)
            }
        };
        Ok(Report::new(Self::NAME, config_echo(self), checks, data))
    }
}

fn bounded(flag: &str, v: u32, max: u32) -> CliResult<()> {
    if v > max {
        return invalid(format!("--{flag} must be at most {max}"));
    }
    Ok(())
}

fn group_arg(s: &str) -> CliResult<modring::invariantforms::AnyGroup> {
    let name: GroupName = s
        .parse()
        .map_err(|e: modring::Error| CliError::Invalid(e.to_string()))?;
    if name.field().is_err() {
        return invalid(format!("group {name} is not supported"));
    }
    Ok(build_group(&name)?)
}

fn element_arg(flag: &str, s: &str) -> CliResult<(u32, usize)> {
    let parsed = s
        .split_once(':')
        .and_then(|(w, i)| Some((w.trim().parse().ok()?, i.trim().parse().ok()?)));
    match parsed {
        Some(p) => Ok(p),
        None => invalid(format!("--{flag} must look like WEIGHT:INDEX, got {s:?}")),
    }
}

fn field_label(radicand: Option<u32>) -> String {
    match radicand {
        Some(d) => format!("Q(i,sqrt{d})"),
        None => "Q(i)".to_string(),
    }
}

type Out = (Vec<CheckRecord>, Value);

fn group_data<R: Radical>(g: &FiniteSubgroup<GaussExt<R>>) -> Out {
    let all_su2 = g.elements().iter().all(|e| e.is_special_unitary());
    let checks = vec![
        CheckRecord::new(
            "closure",
            "group is closed under products and inverses",
            g.check_closed(),
            || json!({ "group": g.name().to_string() }),
        ),
        CheckRecord::new(
            "order",
            "order matches the group name",
            g.order() == g.name().order(),
            || json!({ "found": g.order(), "expected": g.name().order() }),
        ),
        CheckRecord::new(
            "special-unitary",
            "elements lie in SU(2)",
            all_su2,
            || json!({ "group": g.name().to_string() }),
        ),
    ];
    let elements: Vec<_> = g.elements().iter().map(|e| e.to_strings()).collect();
    let data = json!({
        "group": g.name().to_string(),
        "order": g.order(),
        "field": field_label(R::RADICAND),
        "elements": elements,
    });
    (checks, data)
}

fn molien<R: Radical>(g: &FiniteSubgroup<GaussExt<R>>, max: u32) -> CliResult<Out> {
    let table = molien_table(g, max);
    let spaces = invariant_spaces(g, max)?;
    let ranks: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
    let checks = (0..=max as usize)
        .map(|n| {
            CheckRecord::new(
                format!("reynolds-rank[{n:03}]"),
                "rank of the Reynolds projector = averaged character",
                ranks[n] == table.dims[n],
                || json!({ "weight": n, "reynolds": ranks[n], "character": table.dims[n] }),
            )
        })
        .collect();
    let first_nonzero: Vec<usize> = (1..=max as usize)
        .filter(|&n| table.dims[n] > 0)
        .take(3)
        .collect();
    let data = json!({
        "group": g.name().to_string(),
        "max": max,
        "dims": table.dims,
        "generator_weights": table.generator_weights,
        "first_nonzero_weights": first_nonzero,
    });
    Ok((checks, data))
}

fn invariants<R: Radical>(g: &FiniteSubgroup<GaussExt<R>>, weight: u32) -> CliResult<Out> {
    let spaces = invariant_spaces(g, weight)?;
    let space = &spaces[weight as usize];
    let table = molien_table(g, weight);
    let mut checks = vec![CheckRecord::new(
        "dimension",
        "rank of the Reynolds projector = averaged character",
        space.dim() == table.dims[weight as usize],
        || json!({ "weight": weight, "reynolds": space.dim(), "character": table.dims[weight as usize] }),
    )];
    for (i, v) in space.basis().iter().enumerate() {
        checks.push(CheckRecord::new(
            format!("invariance[{i:02}]"),
            "tau(g) v = v for every group element",
            is_invariant(g, v),
            || json!({ "weight": weight, "index": i, "vector": strings(v.coeffs()) }),
        ));
    }
    let basis: Vec<_> = space.basis().iter().map(|v| strings(v.coeffs())).collect();
    let data = json!({
        "group": g.name().to_string(),
        "weight": weight,
        "dim": space.dim(),
        "basis": basis,
    });
    Ok((checks, data))
}

fn multiply<R: Radical>(
    g: &FiniteSubgroup<GaussExt<R>>,
    (w1, i1): (u32, usize),
    (w2, i2): (u32, usize),
) -> CliResult<Out> {
    let spaces = invariant_spaces(g, w1.max(w2))?;
    let pick = |w: u32, i: usize| {
        spaces[w as usize].basis().get(i).cloned().ok_or_else(|| {
            CliError::Invalid(format!(
                "weight {w} has {} invariant basis element(s), index {i} requested",
                spaces[w as usize].dim()
            ))
        })
    };
    let (v1, v2) = (pick(w1, i1)?, pick(w2, i2)?);
    let classical = multiply_invariants_classical(g, &v1, &v2)?;
    let abstract_ = AbstractMultiplier::new(g, w1 + w2)?.multiply(&v1, &v2)?;
    let inputs = json!([format!("{w1}:{i1}"), format!("{w2}:{i2}")]);
    let checks = vec![
        CheckRecord::new(
            "path-equality",
            "abstract product through the comultiplication = pointwise product",
            abstract_ == classical,
            || json!({ "inputs": inputs, "lhs": strings(abstract_.coeffs()), "rhs": strings(classical.coeffs()) }),
        ),
        CheckRecord::new(
            "invariance",
            "product of invariants is invariant",
            is_invariant(g, &classical),
            || json!({ "inputs": inputs, "product": strings(classical.coeffs()) }),
        ),
    ];
    let data = json!({
        "group": g.name().to_string(),
        "left": strings(v1.coeffs()),
        "right": strings(v2.coeffs()),
        "weight": Weight(w1 + w2).0,
        "product": strings(classical.coeffs()),
    });
    Ok((checks, data))
}

fn ring_records(checks: &[RingCheck]) -> Vec<CheckRecord> {
    checks
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let inputs: Vec<String> = c
                .inputs
                .iter()
                .map(|(w, i)| format!("{w:02}:{i}"))
                .collect();
            let anchor = match c.kind.name() {
                "unit" => "constants act as the identity",
                "invariance" => "products of invariants are invariant",
                "grading" => "weights add under multiplication",
                "commutativity" => "fg = gf",
                "associativity" => "(fg)h = f(gh)",
                _ => "abstract product through the comultiplication = pointwise product",
            };
            CheckRecord::new(
                format!("{}[{}]#{idx:05}", c.kind.name(), inputs.join(",")),
                anchor,
                c.passed,
                || {
                    let (l, r) = c.witness.clone().unwrap_or_default();
                    json!({ "inputs": inputs, "lhs": l, "rhs": r })
                },
            )
        })
        .collect()
}

fn verify_ring<R: Radical>(g: &FiniteSubgroup<GaussExt<R>>, max: u32) -> CliResult<Out> {
    let ring = verify_graded_ring(g, max)?;
    let paths = verify_path_equality(g, max)?;
    let mut checks = ring_records(&ring.checks);
    let offset = checks.len();
    checks.extend(ring_records(&paths.checks).into_iter().map(|mut c| {
        // keep the sequence numbers distinct across the two reports
        if let Some((head, n)) = c.name.rsplit_once('#') {
            let n: usize = n.parse().unwrap_or(0);
            c.name = format!("{head}#{:05}", n + offset);
        }
        c
    }));
    let data = json!({
        "group": g.name().to_string(),
        "max": max,
        "dims": ring.dims,
        "field": field_label(<GaussExt<R> as Scalar>::radicand()),
        "checks_run": checks.len(),
    });
    Ok((checks, data))
}
