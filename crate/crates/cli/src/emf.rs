//! `emf`: level-one holomorphic modular forms as exact q-expansions.

use clap::{Parser, Subcommand};
use modring::qforms::{
    all_divisible, dim_formula, discriminant, discriminant_numerator, eisenstein, monomial_basis,
    verify_holomorphic_ring, QSeries,
};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{config_echo, invalid, CheckRecord, CliResult, GlobalArgs, Report, Tool};

const MAX_PREC: usize = 500;
const MAX_WEIGHT: u32 = 200;
const MAX_RING: u32 = 48;

#[derive(Parser, Debug, Serialize)]
#[command(
    name = "emf",
    version,
    about = "Level-one holomorphic modular forms as exact q-expansions"
)]
pub struct EmfCli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: EmfCommand,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum EmfCommand {
    /// Normalized Eisenstein series E_k.
    Eisenstein {
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        prec: usize,
    },
    /// The discriminant Δ = (E4³ − E6²)/1728.
    Delta {
        #[arg(long)]
        prec: usize,
    },
    /// Dimension of M_k.
    Dim {
        #[arg(long)]
        weight: u32,
    },
    /// E4/E6 monomials of weight k and an echelon basis.
    Basis {
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        prec: usize,
    },
    /// Ring axioms on the bases of M_0 … M_{max}.
    VerifyRing {
        #[arg(long)]
        max: u32,
        #[arg(long)]
        prec: usize,
    },
}

impl Tool for EmfCli {
    const NAME: &'static str = "emf";

    fn global(&self) -> &GlobalArgs {
        &self.global
    }

    fn run(&self) -> CliResult<Report> {
        let (checks, data) = match &self.command {
            EmfCommand::Eisenstein { weight, prec } => {
                even_weight(*weight, MAX_WEIGHT)?;
                if *weight < 4 {
                    return invalid("--weight must be at least 4");
                }
                precision(*prec)?;
                let e = eisenstein(*weight, *prec)?;
                let checks = vec![CheckRecord::new(
                    "constant-term",
                    "c_0(E_k) = 1",
                    e.coeff(0) == &one(),
                    || json!({ "c0": e.coeff(0).to_string() }),
                )];
                (checks, series(&e))
            }
            EmfCommand::Delta { prec } => {
                precision(*prec)?;
                delta(*prec)?
            }
            EmfCommand::Dim { weight } => {
                even_weight(*weight, MAX_WEIGHT)?;
                (
                    Vec::new(),
                    json!({ "weight": weight, "dim": dim_formula((*weight).into())? }),
                )
            }
            EmfCommand::Basis { weight, prec } => {
                even_weight(*weight, MAX_WEIGHT)?;
                precision(*prec)?;
                let need = dim_formula((*weight).into())? + 1;
                if *prec < need {
                    return invalid(format!(
                        "--prec must be at least {need} for weight {weight}"
                    ));
                }
                basis(*weight, *prec)?
            }
            EmfCommand::VerifyRing { max, prec } => {
                even_weight(*max, MAX_RING)?;
                precision(*prec)?;
                let need = dim_formula((*max).into())? + 1;
                if *prec < need {
                    return invalid(format!("--prec must be at least {need} for weight {max}"));
                }
                ring(*max, *prec)?
            }
        };
        Ok(Report::new(Self::NAME, config_echo(self), checks, data))
    }
}

fn one() -> BigRational {
    BigRational::from_integer(1.into())
}

fn even_weight(k: u32, max: u32) -> CliResult<()> {
    if !k.is_multiple_of(2) {
        return invalid(format!(
            "weight {k} is odd; level-one forms have even weight"
        ));
    }
    if k > max {
        return invalid(format!("weight must be at most {max}"));
    }
    Ok(())
}

fn precision(n: usize) -> CliResult<()> {
    if n == 0 || n > MAX_PREC {
        return invalid(format!("--prec must be between 1 and {MAX_PREC}"));
    }
    Ok(())
}

pub fn series(f: &QSeries) -> Value {
    json!({ "weight": f.weight(), "precision": f.precision(), "coeffs": f.to_strings() })
}

type Out = (Vec<CheckRecord>, Value);

fn delta(prec: usize) -> CliResult<Out> {
    let d = discriminant(prec)?;
    let num = discriminant_numerator(prec)?;
    let checks = vec![
        CheckRecord::new(
            "cusp",
            "Delta is a cusp form: c_0 = 0",
            d.is_cusp(),
            || json!({ "c0": d.coeff(0).to_string() }),
        ),
        CheckRecord::new(
            "leading",
            "c_1(Delta) = 1",
            d.coeff(1) == &one(),
            || json!({ "c1": d.coeff(1).to_string() }),
        ),
        CheckRecord::new(
            "divisibility-1728",
            "1728 divides every coefficient of E4^3 - E6^2",
            all_divisible(&num, 1728),
            || json!({ "numerator": num.to_strings() }),
        ),
    ];
    Ok((checks, series(&d)))
}

fn basis(k: u32, prec: usize) -> CliResult<Out> {
    let row = monomial_basis(k, prec)?;
    let checks = vec![CheckRecord::new(
        "rank",
        "rank of the E4/E6 monomials = dimension formula",
        row.rank == row.dim,
        || json!({ "weight": k, "rank": row.rank, "dim": row.dim }),
    )];
    let monomials: Vec<Value> = row
        .exponents
        .iter()
        .zip(&row.monomials)
        .map(|(&(x, y), f)| json!({ "e4": x, "e6": y, "series": series(f) }))
        .collect();
    let data = json!({
        "weight": k,
        "dim": row.dim,
        "rank": row.rank,
        "monomials": monomials,
        "basis": row.basis.iter().map(series).collect::<Vec<_>>(),
        "cusp": row.cusp,
    });
    Ok((checks, data))
}

fn ring(k_max: u32, prec: usize) -> CliResult<Out> {
    let report = verify_holomorphic_ring(k_max, prec)?;
    let checks = report
        .checks
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let inputs: Vec<String> = c
                .inputs
                .iter()
                .map(|(k, i)| format!("{k:02}:{i}"))
                .collect();
            let anchor = match c.kind.name() {
                "rank" => "rank of the E4/E6 monomials = dimension formula",
                "unit" => "constants act as the identity",
                "grading" => "M_k1 M_k2 lies in M_{k1+k2}",
                "commutativity" => "fg = gf",
                "associativity" => "(fg)h = f(gh)",
                "cusp-ideal" => "a product with a cusp form is cuspidal",
                _ => "E_k1 E_k2 = E_{k1+k2} with no correction constant",
            };
            CheckRecord::new(
                format!("{}[{}]#{idx:05}", c.kind.name(), inputs.join(",")),
                anchor,
                c.passed,
                || json!({ "inputs": inputs, "detail": c.witness }),
            )
        })
        .collect();
    let dims: Vec<Value> = report.dims.iter().map(|(k, d)| json!([k, d])).collect();
    let data = json!({
        "max": k_max,
        "precision": prec,
        "dims": dims,
        "decomposability_assumed": report.decomposability_assumed,
    });
    Ok((checks, data))
}
