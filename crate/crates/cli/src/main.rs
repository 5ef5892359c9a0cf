//! Command-line front end with JSON input and output.
//!
//! Exit codes: 0 success / extremal class found; 1 malformed input;
//! 2 negative verdict (refuted or not extremal); 3 indeterminate.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use psd3::certify::{self, Verdict};
use psd3::classify::{classify_form, ClassCase};
use psd3::families::{self, FsParam};
use psd3::geometry;
use psd3::io::{ConditionJson, FormJson};
use psd3::lift;
use psd3::scalar::{parse_rat, rat_to_string, Rat};
use psd3::Form;

#[derive(Parser)]
#[command(name = "psd3", version, about = "Exact toolkit for extremal octant-nonnegative ternary cubics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family member as JSON.
    Family(FamilyArgs),
    /// Run the exact identity suite over seeded parameter tuples.
    Identities {
        #[arg(long, default_value_t = 24229)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        tuples: usize,
    },
    /// Compute the kernel of a condition system from a JSON file.
    VerifyExtremal {
        /// JSON: { "degree": d, "conditions": [ { "point": [...], "constraints": [[0,0,0], ...] } ] }
        #[arg(long)]
        input: Option<String>,
        /// Optional expected form to match against the kernel line.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Certify or refute octant nonnegativity of a family member or a form.
    Certify(CertifyArgs),
    /// Octant zero inventory and the weighted zero count.
    Zeros {
        #[arg(long)]
        input: Option<String>,
        /// Also dump rational sample points of each edge restriction.
        #[arg(long, default_value_t = false)]
        emit_points: bool,
    },
    /// Decide the extremality class of a cubic.
    Classify {
        #[arg(long)]
        input: Option<String>,
    },
    /// Square-substitution lift with zero orbits; kernel check optional.
    Lift {
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = false)]
        verify_extremal: bool,
    },
    /// Verify the explicit quartic/quintic lift kernels.
    Appendix {
        /// "octic" (degree-8 lift over the radical tower) or "decic"
        /// (degree-10 rational system).
        #[arg(long)]
        theorem: String,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// f | g | h | fs | f0 | f1 | xyz
    #[arg(long)]
    id: String,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    s: Option<String>,
}

#[derive(Args)]
struct CertifyArgs {
    /// f | g | h, or omit and pass --input with a form.
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    r: Option<String>,
    /// JSON form input (arbitrary cubics get the grid/edge search only).
    #[arg(long)]
    input: Option<String>,
    /// Grid depth for the refutation search on arbitrary forms.
    #[arg(long, default_value_t = 4)]
    depth: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &Option<String>) -> Result<String, String> {
    match path {
        Some(p) if p != "-" => std::fs::read_to_string(p).map_err(|e| e.to_string()),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
            Ok(buf)
        }
    }
}

fn parse_form(text: &str) -> Result<Form<Rat>, String> {
    let fj: FormJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
    fj.to_form().map_err(|e| e.to_string())
}

fn need(opt: &Option<String>, name: &str) -> Result<Rat, String> {
    let s = opt.as_ref().ok_or_else(|| format!("missing --{name}"))?;
    parse_rat(s).map_err(|e| e.to_string())
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Family(args) => {
            let (form, provenance): (Form<Rat>, &str) = match args.id.as_str() {
                "f" => (
                    families::make_f_pqr(&need(&args.p, "p")?, &need(&args.q, "q")?, &need(&args.r, "r")?),
                    "ten-coefficient family with zeros (1:1:1), (0:p:1), (1:0:q), (r:1:0)",
                ),
                "g" => (
                    families::make_g_pq(&need(&args.p, "p")?, &need(&args.q, "q")?),
                    "eight-term family with zeros (1:1:1), (0:1:p), (1:0:q) and two vertices",
                ),
                "h" => (
                    families::make_h_pq(&need(&args.p, "p")?, &need(&args.q, "q")?)
                        .map_err(|e| e.to_string())?,
                    "kernel of the nine cusp/tangency conditions, x^3 coefficient 2",
                ),
                "fs" => {
                    let s = args.s.as_ref().ok_or("missing --s")?;
                    let param = if s == "inf" {
                        FsParam::Infinity
                    } else {
                        FsParam::Finite(parse_rat(s).map_err(|e| e.to_string())?)
                    };
                    (families::make_fs(&param), "cyclic one-parameter family")
                }
                "f0" => (families::cyclic_f0(), "x^2 y + y^2 z + z^2 x - 3xyz"),
                "f1" => (families::schur_f1(), "Schur cubic"),
                "xyz" => (families::monomial_xyz(), "coordinate monomial"),
                other => return Err(format!("unknown family id {other:?}")),
            };
            #[derive(Serialize)]
            struct Out {
                family: String,
                provenance: String,
                form: FormJson,
            }
            print_json(&Out {
                family: args.id,
                provenance: provenance.to_string(),
                form: FormJson::from_form(&form),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Identities { seed, tuples } => {
            let report = families::verify_family_identities(seed, tuples);
            #[derive(Serialize)]
            struct Out {
                total: usize,
                failures: Vec<String>,
                ok: bool,
            }
            let failures: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.ok)
                .map(|c| format!("{} at {}", c.name, c.params))
                .collect();
            let ok = failures.is_empty();
            print_json(&Out { total: report.checks.len(), failures, ok });
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::VerifyExtremal { input, expect } => {
            #[derive(serde::Deserialize)]
            struct In {
                degree: u32,
                conditions: Vec<ConditionJson>,
            }
            let text = read_input(&input)?;
            let parsed: In = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let conditions: Vec<_> = parsed
                .conditions
                .iter()
                .map(|c| c.to_condition())
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let m = psd3::linsys::build_constraint_matrix(&conditions, parsed.degree);
            let k = m.nullspace();
            #[derive(Serialize)]
            struct Out {
                kernel_dim: usize,
                rank: usize,
                basis: Vec<FormJson>,
                matched: Option<bool>,
            }
            let basis: Vec<FormJson> = k
                .basis
                .iter()
                .map(|v| FormJson::from_form(&Form::from_coeff_vector(parsed.degree, v)))
                .collect();
            let matched = match expect {
                Some(path) => {
                    let ef = parse_form(&std::fs::read_to_string(path).map_err(|e| e.to_string())?)?;
                    Some(
                        k.dimension == 1
                            && Form::from_coeff_vector(parsed.degree, &k.basis[0])
                                .proportionality(&ef)
                                .is_some(),
                    )
                }
                None => None,
            };
            let dim = k.dimension;
            print_json(&Out { kernel_dim: dim, rank: k.rank, basis, matched });
            Ok(if matched == Some(false) { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Certify(args) => {
            let outcome = match args.id.as_deref() {
                Some("f") => certify::certify_f(
                    &need(&args.p, "p")?,
                    &need(&args.q, "q")?,
                    &need(&args.r, "r")?,
                )
                .map_err(|e| e.to_string())?,
                Some("g") => certify::certify_g(&need(&args.p, "p")?, &need(&args.q, "q")?)
                    .map_err(|e| e.to_string())?,
                Some("h") => certify::certify_h(&need(&args.p, "p")?, &need(&args.q, "q")?)
                    .map_err(|e| e.to_string())?,
                Some(other) => return Err(format!("unknown family id {other:?}")),
                None => {
                    // arbitrary forms: grid refutation plus edge checks only
                    let f = parse_form(&read_input(&args.input)?)?;
                    match certify::refute_by_grid(&f, args.depth) {
                        Some((pt, v)) => {
                            #[derive(Serialize)]
                            struct Out {
                                verdict: &'static str,
                                point: Vec<String>,
                                value: String,
                            }
                            print_json(&Out {
                                verdict: "refuted",
                                point: pt.iter().map(rat_to_string).collect(),
                                value: rat_to_string(&v),
                            });
                            return Ok(ExitCode::from(2));
                        }
                        None => {
                            #[derive(Serialize)]
                            struct Out {
                                verdict: &'static str,
                                note: String,
                            }
                            print_json(&Out {
                                verdict: "indeterminate",
                                note: format!(
                                    "no negative value on the depth-{} grid; arbitrary forms get no certificate",
                                    args.depth
                                ),
                            });
                            return Ok(ExitCode::from(3));
                        }
                    }
                }
            };
            print_json(&outcome);
            Ok(match outcome.verdict {
                Verdict::Certified => ExitCode::SUCCESS,
                Verdict::Refuted => ExitCode::from(2),
                Verdict::Indeterminate => ExitCode::from(3),
            })
        }
        Command::Zeros { input, emit_points } => {
            let f = parse_form(&read_input(&input)?)?;
            let inv = geometry::boundary_zeros(&f).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct ZeroOut {
                point: Vec<String>,
                location: String,
                local_multiplicity: u32,
                kind: Option<String>,
            }
            #[derive(Serialize)]
            struct Out {
                zeros: Vec<ZeroOut>,
                contained_edges: Vec<String>,
                has_irrational_data: bool,
                n_total: Option<u32>,
                n_breakdown: Option<Vec<u32>>,
                sample_points: Option<Vec<Vec<String>>>,
            }
            let zeros = inv
                .zeros
                .iter()
                .map(|z| ZeroOut {
                    point: z.point.coords.iter().map(rat_to_string).collect(),
                    location: format!("{:?}", z.location),
                    local_multiplicity: z.local_multiplicity,
                    kind: z.singularity.as_ref().map(|s| format!("{:?}", s.kind)),
                })
                .collect();
            let n = geometry::count_n_from(&inv).ok();
            let sample_points = emit_points.then(|| {
                // rational curve samples: grid points with value zero
                let mut out = Vec::new();
                for i in 0..=24i64 {
                    for j in 0..=(24 - i) {
                        let k = 24 - i - j;
                        let pt = [
                            psd3::scalar::rat(i, 24),
                            psd3::scalar::rat(j, 24),
                            psd3::scalar::rat(k, 24),
                        ];
                        if f.eval(&pt) == psd3::scalar::rat_int(0) {
                            out.push(pt.iter().map(rat_to_string).collect());
                        }
                    }
                }
                out
            });
            print_json(&Out {
                zeros,
                contained_edges: inv.contained_edges.iter().map(|v| v.name().to_string()).collect(),
                has_irrational_data: inv.has_irrational_data,
                n_total: n.as_ref().map(|c| c.total),
                n_breakdown: n.as_ref().map(|c| c.breakdown.clone()),
                sample_points,
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { input } => {
            let f = parse_form(&read_input(&input)?)?;
            let r = classify_form(&f).map_err(|e| e.to_string())?;
            print_json(&r);
            Ok(match r.verdict {
                ClassCase::NotExtremal => ExitCode::from(2),
                ClassCase::Indeterminate => ExitCode::from(3),
                _ => ExitCode::SUCCESS,
            })
        }
        Command::Lift { input, verify_extremal } => {
            let f = parse_form(&read_input(&input)?)?;
            let inv = geometry::boundary_zeros(&f).map_err(|e| e.to_string())?;
            let report = lift::lift_with_orbits(&f, &inv).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Out {
                lifted: FormJson,
                tower: Vec<u64>,
                orbits: Vec<lift::OrbitSummary>,
                total_count: u32,
                verification: Option<lift::LiftVerification>,
            }
            let verification = if verify_extremal {
                let (v, _) = lift::verify_lift_extremal(&report).map_err(|e| e.to_string())?;
                Some(v)
            } else {
                None
            };
            let failed = verification.as_ref().map(|v| !v.matched).unwrap_or(false);
            print_json(&Out {
                lifted: FormJson::from_form(&report.lifted),
                tower: report.tower.radicands().to_vec(),
                orbits: report.orbit_summaries,
                total_count: report.total_count,
                verification,
            });
            Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Appendix { theorem } => {
            let report = match theorem.as_str() {
                "octic" | "4.2" => psd3::appendix::verify_octic().map_err(|e| e.to_string())?,
                "decic" | "4.3" => psd3::appendix::verify_decic().map_err(|e| e.to_string())?,
                other => return Err(format!("unknown appendix theorem {other:?} (use octic or decic)")),
            };
            let ok = report.matched && report.kernel_dim == 1;
            print_json(&report);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
    }
}
