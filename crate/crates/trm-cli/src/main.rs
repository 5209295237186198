//! `trm`: exact computation in the Brown-Thompson groups T_{r,m}.
//!
//! Every command reads and writes JSON on standard streams. Exit codes are
//! part of the contract: 0 for success, 1 for usage errors (bad flags,
//! unreadable or malformed input documents), 2 for mathematically
//! well-posed requests that must be refused (intervals not equivalent,
//! elements not conjugate, no element of the requested order). Refusals
//! carry a machine-readable `reason` field so pipelines can tell "false"
//! from "broken".

mod pretty;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Value, json};

use trm_core::arith::gcd_u64;
use trm_core::bieri_strebel::{interval_witness, piecewise_defect};
use trm_core::conjugacy::{
    class_representatives, conjugating_witness, count_classes, count_classes_per_rotation,
    descriptor, morphism_obstruction, order_obstructions,
};
use trm_core::json::{
    MapDocument, check_map_text, circle_to_value, madic_value, parse_circle_map, parse_map,
    segment_to_value,
};
use trm_core::oracle::class_census;
use trm_core::torsion::{construct_torsion, construct_torsion_with_rotation};
use trm_core::{Error, GroupParams, MAdic, OrderBudget, PLCircleMap, Result};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Compact JSON on one line.
    Json,
    /// Piecewise formulas and indented reports for human reading.
    Pretty,
}

#[derive(Parser)]
#[command(
    name = "trm",
    version,
    about = "Exact computation in the Brown-Thompson groups T_{r,m}",
    long_about = "Exact computation in the Brown-Thompson groups T_{r,m} of \
piecewise-linear circle homeomorphisms: evaluate and compose maps, construct \
finite-order elements, decide conjugacy with explicit witnesses, and count \
conjugacy classes. All arithmetic is exact; no floating point is involved.\n\n\
Map arguments are paths to JSON documents, or - for standard input.\n\
Exit codes: 0 success, 1 usage error, 2 mathematical refusal (JSON `reason` field)."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a map document is well formed; list every violation.
    Validate {
        /// Map document (path or - for stdin).
        map: String,
    },
    /// Apply a map to an m-adic point (circle points are taken mod r).
    Eval {
        /// Map document (path or - for stdin).
        map: String,
        /// Point, as an m-adic literal like "7/3^2".
        point: String,
    },
    /// Compose maps: `compose f g` applies g first, then f.
    Compose {
        /// Two or more map documents, outermost first.
        #[arg(num_args = 2.., value_name = "MAP")]
        maps: Vec<String>,
    },
    /// Invert a map.
    Inverse {
        /// Map document (path or - for stdin).
        map: String,
    },
    /// Raise a group element to an integer power (negative allowed).
    Power {
        /// Circle map document (path or - for stdin).
        map: String,
        /// Exponent.
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Finite order of a group element, if one exists within the cap.
    Order {
        /// Circle map document (path or - for stdin).
        map: String,
        /// Iteration cap for the order search.
        #[arg(long, env = "TRM_ORDER_CAP", default_value_t = 4096)]
        cap: u32,
    },
    /// Rotation number of a finite-order element.
    Rot {
        /// Circle map document (path or - for stdin).
        map: String,
        /// Iteration cap for the order search.
        #[arg(long, env = "TRM_ORDER_CAP", default_value_t = 4096)]
        cap: u32,
    },
    /// Construct a finite-order element of T_{r,m}.
    Construct {
        /// Circumference r of the circle.
        #[arg(long)]
        r: u32,
        /// Slope base m.
        #[arg(long)]
        m: u32,
        /// Desired order q.
        #[arg(long)]
        order: u32,
        /// Rotation numerator p (coprime to q); the element has rotation p/q.
        #[arg(long)]
        rot: Option<u32>,
        /// First orbit point a = f(0), an m-adic literal; must be admissible.
        #[arg(long)]
        a: Option<String>,
    },
    /// Witness homeomorphism between PL_m-equivalent intervals.
    BsWitness {
        /// Slope base m.
        #[arg(long)]
        m: u32,
        /// Source interval "A,C" (two m-adic literals).
        #[arg(long, value_name = "A,C")]
        from: String,
        /// Target interval "A2,C2".
        #[arg(long, value_name = "A2,C2")]
        to: String,
    },
    /// Decide whether two finite-order elements are conjugate.
    ConjugateTest {
        /// First circle map document.
        f1: String,
        /// Second circle map document.
        f2: String,
        /// Iteration cap for the order search.
        #[arg(long, env = "TRM_ORDER_CAP", default_value_t = 4096)]
        cap: u32,
    },
    /// Explicit conjugator h with h f1 h^-1 = f2.
    ConjugateWitness {
        /// First circle map document.
        f1: String,
        /// Second circle map document.
        f2: String,
        /// Iteration cap for the order search.
        #[arg(long, env = "TRM_ORDER_CAP", default_value_t = 4096)]
        cap: u32,
    },
    /// Count conjugacy classes of order-q elements of T_{r,m}.
    CountClasses {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Element order q.
        #[arg(long)]
        q: u32,
        /// Count classes at one fixed rotation number instead of all.
        #[arg(long)]
        per_rotation: bool,
    },
    /// One representative per conjugacy class at rotation number p/q.
    Representatives {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Element order q.
        #[arg(long)]
        q: u32,
        /// Rotation numerator p, coprime to q.
        #[arg(long)]
        p: u32,
    },
    /// Randomized census cross-checking the class-count formula.
    Census {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Element order q.
        #[arg(long)]
        q: u32,
        /// Random conjugations per class representative.
        #[arg(long, default_value_t = 30)]
        trials: u32,
        /// PRNG seed (ChaCha8).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Orders q <= qmax at which T_{r,m} has no elements.
    Obstructions {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Largest order scanned.
        #[arg(long, default_value_t = 20)]
        qmax: u32,
    },
    /// Torsion obstructions to morphisms between two groups.
    MorphismCheck {
        /// Source circumference r.
        #[arg(long)]
        src_r: u32,
        /// Source base m.
        #[arg(long)]
        src_m: u32,
        /// Target circumference r.
        #[arg(long)]
        tgt_r: u32,
        /// Target base m.
        #[arg(long)]
        tgt_m: u32,
        /// Largest order scanned.
        #[arg(long, default_value_t = 20)]
        qmax: u32,
    },
}

struct Outcome {
    json: Value,
    pretty: Option<String>,
    exit: u8,
}

impl Outcome {
    fn ok(json: Value) -> Outcome {
        Outcome {
            json,
            pretty: None,
            exit: 0,
        }
    }

    fn with_pretty(mut self, text: String) -> Outcome {
        self.pretty = Some(text);
        self
    }

    fn with_exit(mut self, exit: u8) -> Outcome {
        self.exit = exit;
        self
    }
}

fn read_source(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidArgument(format!("cannot read standard input: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(arg)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {arg}: {e}")))
}

fn load_circle(arg: &str) -> Result<PLCircleMap> {
    parse_circle_map(&read_source(arg)?)
}

fn load_any(arg: &str) -> Result<MapDocument> {
    parse_map(&read_source(arg)?)
}

/// The group an element belongs to, from its circle and base.
fn infer_params(f: &PLCircleMap) -> Result<GroupParams> {
    let m = f.base();
    let r = f.r_src();
    if !r.is_integer() || r.signum() <= 0 {
        return Err(Error::InvalidArgument(format!(
            "group operations need an integer circumference, got S_{}",
            r.render(m)
        )));
    }
    let r_val: u32 = r.render(m).parse().map_err(|_| {
        Error::InvalidArgument(format!("circumference {} is too large", r.render(m)))
    })?;
    GroupParams::new(r_val, m)
}

fn check_same_group(f1: &PLCircleMap, f2: &PLCircleMap) -> Result<()> {
    if f1.base() != f2.base() {
        return Err(Error::BaseMismatch(f1.base(), f2.base()));
    }
    if f1.r_src() != f2.r_src() {
        return Err(Error::CircleMismatch(format!(
            "elements live on S_{} and S_{}",
            f1.r_src().render(f1.base()),
            f2.r_src().render(f2.base())
        )));
    }
    Ok(())
}

fn parse_interval(text: &str, m: u32) -> Result<(MAdic, MAdic)> {
    let (lo, hi) = text.split_once(',').ok_or_else(|| {
        Error::InvalidArgument(format!(
            "expected two comma-separated m-adic literals, got {text:?}"
        ))
    })?;
    Ok((MAdic::parse(lo.trim(), m)?, MAdic::parse(hi.trim(), m)?))
}

fn map_outcome(doc: &MapDocument) -> Outcome {
    match doc {
        MapDocument::Circle(f) => {
            Outcome::ok(circle_to_value(f)).with_pretty(pretty::circle_map(f))
        }
        MapDocument::Segment(f) => {
            Outcome::ok(segment_to_value(f)).with_pretty(pretty::segment_map(f))
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize without error")
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { map } => {
            let text = read_source(map)?;
            let violations = check_map_text(&text);
            let valid = violations.is_empty();
            let pretty = if valid {
                "valid".to_string()
            } else {
                format!("invalid:\n  {}", violations.join("\n  "))
            };
            Ok(
                Outcome::ok(json!({"valid": valid, "violations": violations}))
                    .with_pretty(pretty)
                    .with_exit(if valid { 0 } else { 1 }),
            )
        }

        Command::Eval { map, point } => {
            let (m, x, y) = match load_any(map)? {
                MapDocument::Circle(f) => {
                    let x = MAdic::parse(point, f.base())?;
                    let y = f.evaluate(&x);
                    (f.base(), x, y)
                }
                MapDocument::Segment(f) => {
                    let x = MAdic::parse(point, f.base())?;
                    let y = f.evaluate(&x)?;
                    (f.base(), x, y)
                }
            };
            Ok(
                Outcome::ok(json!({"x": madic_value(&x, m), "y": madic_value(&y, m)}))
                    .with_pretty(format!("f({}) = {}", x.render(m), y.render(m))),
            )
        }

        Command::Compose { maps } => {
            let mut docs = Vec::with_capacity(maps.len());
            for arg in maps {
                docs.push(load_any(arg)?);
            }
            let mut iter = docs.into_iter().rev();
            let mut acc = iter.next().expect("clap enforces at least two maps");
            for outer in iter {
                acc = match (outer, acc) {
                    (MapDocument::Circle(f), MapDocument::Circle(g)) => {
                        MapDocument::Circle(f.compose(&g)?)
                    }
                    (MapDocument::Segment(f), MapDocument::Segment(g)) => {
                        MapDocument::Segment(f.compose(&g)?)
                    }
                    _ => {
                        return Err(Error::InvalidArgument(
                            "cannot compose a circle map with a segment map".into(),
                        ));
                    }
                };
            }
            Ok(map_outcome(&acc))
        }

        Command::Inverse { map } => {
            let doc = match load_any(map)? {
                MapDocument::Circle(f) => MapDocument::Circle(f.inverse()),
                MapDocument::Segment(f) => MapDocument::Segment(f.inverse()),
            };
            Ok(map_outcome(&doc))
        }

        Command::Power { map, n } => {
            let MapDocument::Circle(f) = load_any(map)? else {
                return Err(Error::InvalidArgument(
                    "power is a group operation and needs a circle map".into(),
                ));
            };
            Ok(map_outcome(&MapDocument::Circle(f.power(*n)?)))
        }

        Command::Order { map, cap } => {
            let f = load_circle(map)?;
            let budget = OrderBudget::with_iterations(*cap);
            let order = f.order(&budget)?;
            let pretty = match order {
                Some(q) => format!("order: {q}"),
                None => format!("no finite order within {cap} iterations"),
            };
            Ok(
                Outcome::ok(json!({"order": order, "iteration_cap": cap}))
                    .with_pretty(pretty),
            )
        }

        Command::Rot { map, cap } => {
            let f = load_circle(map)?;
            let budget = OrderBudget::with_iterations(*cap);
            let rho = f.rotation_number(&budget)?;
            Ok(Outcome::ok(json!({
                "rotation": rho.render(),
                "p": rho.numerator(),
                "q": rho.denominator(),
            }))
            .with_pretty(format!("rotation number: {}", rho.render())))
        }

        Command::Construct {
            r,
            m,
            order,
            rot,
            a,
        } => {
            let params = GroupParams::new(*r, *m)?;
            let p = rot.unwrap_or(1);
            let f = match a {
                Some(text) => {
                    let a = MAdic::parse(text, *m)?;
                    if gcd_u64(u64::from(p), u64::from(*order)) != 1 {
                        return Err(Error::NotCoprime(p, *order));
                    }
                    let base = construct_torsion(&params, *order, &a)?;
                    base.power(i64::from(p))?
                }
                None => construct_torsion_with_rotation(&params, *order, p)?,
            };
            Ok(map_outcome(&MapDocument::Circle(f)))
        }

        Command::BsWitness { m, from, to } => {
            let (a, c) = parse_interval(from, *m)?;
            let (a2, c2) = parse_interval(to, *m)?;
            let w = interval_witness(&a, &c, &a2, &c2, *m)?;
            let l1 = c.sub(&a, *m);
            let l2 = c2.sub(&a2, *m);
            let diff = l2.sub(&l1, *m);
            let verified = w.violations().is_empty()
                && w.domain() == (&a, &c)
                && w.codomain() == (&a2, &c2)
                && piecewise_defect(&w) == diff;
            let mut json = json!({
                "witness": segment_to_value(&w),
                "from": [madic_value(&a, *m), madic_value(&c, *m)],
                "to": [madic_value(&a2, *m), madic_value(&c2, *m)],
                "length_difference": madic_value(&diff, *m),
                "verified": verified,
            });
            if !verified {
                json["reason"] = "witness-failed-verification".into();
            }
            let pretty = format!("{}\nverified: {verified}", pretty::segment_map(&w));
            Ok(Outcome::ok(json)
                .with_pretty(pretty)
                .with_exit(if verified { 0 } else { 2 }))
        }

        Command::ConjugateTest { f1, f2, cap } => {
            let f1 = load_circle(f1)?;
            let f2 = load_circle(f2)?;
            check_same_group(&f1, &f2)?;
            let params = infer_params(&f1)?;
            let budget = OrderBudget::with_iterations(*cap);
            let d1 = descriptor(&f1, &params, &budget)?;
            let d2 = descriptor(&f2, &params, &budget)?;
            let conjugate = d1 == d2;
            let mut json = json!({
                "conjugate": conjugate,
                "group": params.label(),
                "descriptors": [d1, d2],
            });
            let pretty = if conjugate {
                format!("conjugate in {}\n{}", params.label(), pretty::descriptor(&d1))
            } else {
                json["reason"] = "descriptor-mismatch".into();
                format!(
                    "not conjugate in {}\nf1 {}\nf2 {}",
                    params.label(),
                    pretty::descriptor(&d1),
                    pretty::descriptor(&d2)
                )
            };
            Ok(Outcome::ok(json)
                .with_pretty(pretty)
                .with_exit(if conjugate { 0 } else { 2 }))
        }

        Command::ConjugateWitness { f1, f2, cap } => {
            let f1 = load_circle(f1)?;
            let f2 = load_circle(f2)?;
            check_same_group(&f1, &f2)?;
            let params = infer_params(&f1)?;
            let budget = OrderBudget::with_iterations(*cap);
            let h = conjugating_witness(&f1, &f2, &params, &budget)?;
            let verified = f1.conjugate_by(&h)? == f2 && h.violations().is_empty();
            let d = descriptor(&f1, &params, &budget)?;
            let mut json = json!({
                "witness": circle_to_value(&h),
                "verified": verified,
                "group": params.label(),
                "descriptor": d,
            });
            if !verified {
                json["reason"] = "witness-failed-verification".into();
            }
            let pretty = format!(
                "{}\n{}\nverified: {verified}",
                pretty::circle_map(&h),
                pretty::descriptor(&d)
            );
            Ok(Outcome::ok(json)
                .with_pretty(pretty)
                .with_exit(if verified { 0 } else { 2 }))
        }

        Command::CountClasses {
            r,
            m,
            q,
            per_rotation,
        } => {
            let params = GroupParams::new(*r, *m)?;
            let count = if *per_rotation {
                count_classes_per_rotation(&params, *q)
            } else {
                count_classes(&params, *q)
            };
            let scope = if *per_rotation {
                "per rotation number"
            } else {
                "total"
            };
            Ok(Outcome::ok(json!({
                "r": r, "m": m, "q": q,
                "per_rotation": per_rotation,
                "count": count,
            }))
            .with_pretty(format!(
                "{}: {count} conjugacy class(es) of order-{q} elements ({scope})",
                params.label()
            )))
        }

        Command::Representatives { r, m, q, p } => {
            let params = GroupParams::new(*r, *m)?;
            let reps = class_representatives(&params, *q, *p)?;
            let budget = OrderBudget::default();
            let mut items = Vec::with_capacity(reps.len());
            let mut pretty_parts = Vec::with_capacity(reps.len());
            for f in &reps {
                let d = descriptor(f, &params, &budget)?;
                items.push(json!({"map": circle_to_value(f), "descriptor": d}));
                pretty_parts.push(format!("{}\n{}", pretty::descriptor(&d), pretty::circle_map(f)));
            }
            Ok(Outcome::ok(json!({
                "r": r, "m": m, "q": q, "p": p,
                "count": reps.len(),
                "representatives": items,
            }))
            .with_pretty(pretty_parts.join("\n\n")))
        }

        Command::Census {
            r,
            m,
            q,
            trials,
            seed,
        } => {
            let params = GroupParams::new(*r, *m)?;
            let report = class_census(&params, *q, *trials, *seed)?;
            let passes = report.passes();
            let mut json = to_value(&report);
            if !passes {
                json["reason"] = "census-mismatch".into();
            }
            Ok(Outcome::ok(json).with_exit(if passes { 0 } else { 2 }))
        }

        Command::Obstructions { r, m, qmax } => {
            let params = GroupParams::new(*r, *m)?;
            let missing = order_obstructions(&params, *qmax);
            let pretty = if missing.is_empty() {
                format!("{} has elements of every order up to {qmax}", params.label())
            } else {
                format!(
                    "{} has no elements of order: {}",
                    params.label(),
                    missing
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            Ok(Outcome::ok(json!({
                "r": r, "m": m,
                "scanned_up_to": qmax,
                "missing_orders": missing,
            }))
            .with_pretty(pretty))
        }

        Command::MorphismCheck {
            src_r,
            src_m,
            tgt_r,
            tgt_m,
            qmax,
        } => {
            let src = GroupParams::new(*src_r, *src_m)?;
            let tgt = GroupParams::new(*tgt_r, *tgt_m)?;
            let report = morphism_obstruction(&src, &tgt, *qmax);
            let mut json = to_value(&report);
            json["source"] = src.label().into();
            json["target"] = tgt.label().into();
            Ok(Outcome::ok(json))
        }
    }
}

fn emit(out: &Outcome, format: Format) {
    let text = match format {
        Format::Json => out.json.to_string(),
        Format::Pretty => match &out.pretty {
            Some(text) => text.clone(),
            None => serde_json::to_string_pretty(&out.json).expect("value serializes"),
        },
    };
    // Exit quietly when the reading end of a pipe has gone away (e.g. `head`).
    if let Err(e) = writeln!(io::stdout(), "{text}")
        && e.kind() == io::ErrorKind::BrokenPipe
    {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            emit(&out, cli.format);
            ExitCode::from(out.exit)
        }
        Err(e) if e.is_usage() => {
            let _ = writeln!(io::stderr(), "error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            let doc = json!({"error": e.to_string(), "reason": e.reason()});
            emit(&Outcome::ok(doc), cli.format);
            ExitCode::from(2)
        }
    }
}
