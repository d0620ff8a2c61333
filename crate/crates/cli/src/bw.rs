//! `bw`: section spaces, highest-weight vectors and the comultiplication.

use clap::{Parser, Subcommand};
use modring::borelweil::{
    comultiplication, dual_highest_weight_vector, evaluate_at_identity, highest_weight_vector,
    inner_product, multiplication_matrix, tensor_gram, verify_co_axioms_bounded, Section,
    SectionSpace, Weight, WeightMonoid,
};
use modring::invariantforms::{representation_matrices, ring::extra_samples};
use modring::{DenseMat, GaussRational, Mat2, NoRadical, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{config_echo, invalid, strings, CheckRecord, CliResult, GlobalArgs, Report, Tool};

type Qi = GaussRational;
type Out = (Vec<CheckRecord>, Value);

/// Largest weight accepted by any `bw` subcommand.
const MAX_WEIGHT: u32 = 64;

#[derive(Parser, Debug, Serialize)]
#[command(
    name = "bw",
    version,
    about = "Borel-Weil section spaces of SU(2) and their comultiplication"
)]
pub struct BwCli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: BwCommand,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum BwCommand {
    /// Dimension of H_n.
    Dim {
        #[arg(long)]
        weight: u32,
    },
    /// Gram matrix of the Haar inner product on H_n.
    Gram {
        #[arg(long)]
        weight: u32,
    },
    /// Highest-weight vector h_n and its Riesz dual.
    Hwv {
        #[arg(long)]
        weight: u32,
    },
    /// Matrices of μ and μ* for a pair of weights.
    Comul {
        #[arg(long)]
        left: u32,
        #[arg(long)]
        right: u32,
        /// Random SU(2) elements for the intertwining spot check (needs --seed).
        #[arg(long, default_value_t = 3)]
        samples: u32,
    },
    /// Co-identity, co-commutativity and co-associativity.
    VerifyAxioms {
        /// Bound on λ1 + λ2 for pairs.
        #[arg(long)]
        max: u32,
        /// Bound on λ1 + λ2 + λ3 for triples; defaults to --max.
        #[arg(long)]
        max_triple: Option<u32>,
    },
}

impl Tool for BwCli {
    const NAME: &'static str = "bw";

    fn global(&self) -> &GlobalArgs {
        &self.global
    }

    fn run(&self) -> CliResult<Report> {
        let (checks, data) = match &self.command {
            BwCommand::Dim { weight } => {
                let w = weight_arg("weight", *weight)?;
                (Vec::new(), json!({ "weight": w.0, "dim": w.dim() }))
            }
            BwCommand::Gram { weight } => gram(weight_arg("weight", *weight)?),
            BwCommand::Hwv { weight } => hwv(weight_arg("weight", *weight)?)?,
            BwCommand::Comul {
                left,
                right,
                samples,
            } => {
                let (w1, w2) = (weight_arg("left", *left)?, weight_arg("right", *right)?);
                if w1.plus(w2).0 > MAX_WEIGHT {
                    return invalid(format!("left + right must be at most {MAX_WEIGHT}"));
                }
                comul(w1, w2, self.global.seed, *samples)?
            }
            BwCommand::VerifyAxioms { max, max_triple } => {
                let max = weight_arg("max", *max)?;
                let triple = weight_arg("max-triple", max_triple.unwrap_or(max.0))?;
                axioms(max.0, triple.0)
            }
        };
        Ok(Report::new(Self::NAME, config_echo(self), checks, data))
    }
}

fn weight_arg(flag: &str, n: u32) -> CliResult<Weight> {
    if n > MAX_WEIGHT {
        return invalid(format!("--{flag} must be at most {MAX_WEIGHT}"));
    }
    Ok(Weight(n))
}

fn rows(m: &DenseMat<Qi>) -> Vec<Vec<String>> {
    m.to_string_rows()
}

fn gram(w: Weight) -> Out {
    let space = SectionSpace::<Qi>::new(w);
    let g = space.gram_matrix();
    let hermitian = g.conj_transpose() == g;
    let checks = vec![CheckRecord::new(
        "gram-hermitian",
        "Haar inner product is Hermitian",
        hermitian,
        || json!({ "weight": w.0, "gram": rows(&g) }),
    )];
    (
        checks,
        json!({ "weight": w.0, "diagonal": strings(space.gram_diag()), "gram": rows(&g) }),
    )
}

fn hwv(w: Weight) -> CliResult<Out> {
    let n = w.0 as i64;
    let h = highest_weight_vector::<Qi>(w);
    let hd = dual_highest_weight_vector::<Qi>(w);
    let nh = inner_product(&h, &h)?;
    let nd = inner_product(&hd, &hd)?;
    let expect_h = Qi::gaussian_int(1, 0, n + 1);
    let expect_d = Qi::from_i64(n + 1);
    let mut checks = vec![
        CheckRecord::new(
            "hwv-norm",
            "<h_n, h_n> = 1/(n+1)",
            nh == expect_h,
            || json!({ "weight": w.0, "lhs": nh.to_canonical(), "rhs": expect_h.to_canonical() }),
        ),
        CheckRecord::new(
            "dual-hwv-norm",
            "<h_n^v, h_n^v> = n+1",
            nd == expect_d,
            || json!({ "weight": w.0, "lhs": nd.to_canonical(), "rhs": expect_d.to_canonical() }),
        ),
        CheckRecord::new(
            "hwv-value",
            "h_n(1) = 1",
            evaluate_at_identity(&h) == Qi::from_i64(1),
            || json!({ "weight": w.0, "value": evaluate_at_identity(&h).to_canonical() }),
        ),
    ];
    for j in 0..w.dim() {
        let e = Section::<Qi>::basis(w, j);
        let lhs = inner_product(&hd, &e)?;
        let rhs = evaluate_at_identity(&e);
        checks.push(CheckRecord::new(
            format!("riesz-evaluation[{j:02}]"),
            "<h^v, f> = f(1)",
            lhs == rhs,
            || json!({ "weight": w.0, "basis": j, "lhs": lhs.to_canonical(), "rhs": rhs.to_canonical() }),
        ));
    }
    let data = json!({
        "weight": w.0,
        "hwv": strings(h.coeffs()),
        "dual_hwv": strings(hd.coeffs()),
        "hwv_norm": nh.to_canonical(),
        "dual_hwv_norm": nd.to_canonical(),
    });
    Ok((checks, data))
}

/// Words in a fixed set of SU(2) elements with Gaussian-rational entries.
fn random_elements(seed: u64, count: u32) -> Vec<Mat2<Qi>> {
    let half = |n: i64| Qi::gaussian_int(n, 0, 2);
    let mut pool = extra_samples::<NoRadical>();
    pool.push(Mat2::from_quaternion(half(1), half(1), half(1), half(1)));
    pool.push(Mat2::from_quaternion(half(0), half(0), half(2), half(0)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=6);
            (0..len).fold(Mat2::identity(), |acc, _| {
                acc.mul(&pool[rng.gen_range(0..pool.len())])
            })
        })
        .collect()
}

fn comul(w1: Weight, w2: Weight, seed: Option<u64>, samples: u32) -> CliResult<Out> {
    let w = w1.plus(w2);
    let mu = comultiplication::<Qi>(w1, w2);
    let m = mu.comul_matrix();
    let inputs = json!([w1.0, w2.0]);
    let mut checks = Vec::new();

    let image = mu.apply(&dual_highest_weight_vector(w))?;
    let (d1, d2) = (
        dual_highest_weight_vector::<Qi>(w1),
        dual_highest_weight_vector::<Qi>(w2),
    );
    let expect = DenseMat::from_columns(d1.coeffs().len(), &[d1.coeffs().to_vec()])?
        .kron(&DenseMat::from_columns(
            d2.coeffs().len(),
            &[d2.coeffs().to_vec()],
        )?)
        .column(0);
    checks.push(CheckRecord::new(
        "dual-hwv-image",
        "mu(h^v_{l1+l2}) = h^v_l1 (x) h^v_l2",
        image == expect,
        || json!({ "inputs": inputs, "lhs": strings(&image), "rhs": strings(&expect) }),
    ));

    let rank = m.rank();
    checks.push(CheckRecord::new(
        "full-column-rank",
        "mu is injective",
        rank == w.dim(),
        || json!({ "inputs": inputs, "rank": rank, "columns": w.dim() }),
    ));

    let star = multiplication_matrix::<Qi>(w1, w2);
    let g_sum = SectionSpace::<Qi>::new(w).gram_matrix();
    let lhs = tensor_gram::<Qi>(w1, w2).transpose().matmul(m)?;
    let rhs = star.conj_transpose().matmul(&g_sum.transpose())?;
    checks.push(CheckRecord::new(
        "adjointness",
        "<mu(h), x> = <h, mu*(x)>",
        lhs == rhs,
        || json!({ "inputs": inputs, "lhs": rows(&lhs), "rhs": rows(&rhs) }),
    ));

    let mut spot = Vec::new();
    if let Some(seed) = seed {
        for (s, k) in random_elements(seed, samples).iter().enumerate() {
            let reps = representation_matrices(k, w.0)?;
            let r1 = &reps[w1.0 as usize];
            let r2 = &reps[w2.0 as usize];
            let lhs = m.matmul(&reps[w.0 as usize])?;
            let rhs = r1.kron(r2).matmul(m)?;
            checks.push(CheckRecord::new(
                format!("intertwining[{s:02}]"),
                "mu tau(k) = (tau(k) (x) tau(k)) mu",
                lhs == rhs,
                || json!({ "inputs": inputs, "element": k.to_strings(), "lhs": rows(&lhs), "rhs": rows(&rhs) }),
            ));
            spot.push(k.to_strings());
        }
    }

    let data = json!({
        "left": w1.0,
        "right": w2.0,
        "comul": rows(m),
        "mul": rows(mu.mul_matrix()),
        "rank": rank,
        "spot_check_elements": spot,
    });
    Ok((checks, data))
}

fn axioms(max_pair: u32, max_triple: u32) -> Out {
    let report = verify_co_axioms_bounded::<Qi>(max_pair, max_triple);
    let mut checks = Vec::new();
    for (idx, c) in report.checks.iter().enumerate() {
        let ws: Vec<String> = c.weights.iter().map(|w| format!("{w:02}")).collect();
        let anchor = match c.axiom.name() {
            "co-identity" => "mu_{0,l} and mu_{l,0} are the canonical maps",
            "co-commutativity" => "comm mu_{l1,l2} = mu_{l2,l1}",
            _ => "(Id (x) mu_{l2,l3}) mu_{l1,l2+l3} = (mu_{l1,l2} (x) Id) mu_{l1+l2,l3}",
        };
        checks.push(CheckRecord::new(
            format!("{}[{}]#{idx:04}", c.axiom.name(), ws.join(",")),
            anchor,
            c.passed,
            || {
                let (l, r) = c.witness.clone().unwrap_or_default();
                json!({ "weights": c.weights, "lhs": l, "rhs": r })
            },
        ));
    }
    let counts: Value = ["co-identity", "co-commutativity", "co-associativity"]
        .iter()
        .map(|n| {
            let k = report
                .checks
                .iter()
                .filter(|c| c.axiom.name() == *n)
                .count();
            (n.to_string(), json!(k))
        })
        .collect::<serde_json::Map<_, _>>()
        .into();
    (
        checks,
        json!({ "max_pair": max_pair, "max_triple": max_triple, "counts": counts, "all_passed": report.all_passed() }),
    )
}
