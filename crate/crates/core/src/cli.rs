//! Command-line front end. [`execute`] turns parsed arguments into a report
//! that `main` prints; errors map to stable exit codes via [`exit_code`].

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ladder::{self, LadderFile};
use crate::minor::{self, Minor};
use crate::oracle;
use crate::order::{OrderKind, Scan, TermOrder};
use crate::permutation::{self, Permutation};
use crate::poly::Polynomial;
use crate::schubert;
use crate::tri_char;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_SCALE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "detgb", version, about = "Gröbner bases of Schubert and ladder determinantal ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Combinatorics and bases of Schubert determinantal ideals.
    Schubert(SchubertArgs),
    /// Oracle checks on a generating set.
    Verify(VerifyArgs),
    /// One- and two-sided ladders and blockwise criteria.
    Ladder(LadderArgs),
    /// Seeded comparison of the closed-form basis with the oracle.
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchubertWhat {
    Ess,
    Rothe,
    Fulton,
    Elusive,
    Redgb,
    Wchar,
}

#[derive(Debug, Args)]
pub struct SchubertArgs {
    pub what: SchubertWhat,
    /// Permutation: `2143`, `[1,9,4,2,7,6,3,5,10,8]` or `1 2 3`.
    #[arg(required = true, num_args = 1..)]
    pub perm: Vec<String>,
    /// Scanning order (new, nes, swe, swn, nwe, nws, sew, sen).
    #[arg(long, default_value = "new")]
    pub order: Scan,
    /// Print counts and wall time instead of the objects.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyWhat {
    Gb,
    Minimal,
    Reduced,
    Normality,
    Strongpair,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["schubert", "elusive", "fulton", "polys"])))]
pub struct VerifyArgs {
    pub what: VerifyWhat,
    /// Reduced basis from the closed form, or the elusive minors when there is none.
    #[arg(long)]
    pub schubert: Option<String>,
    /// Expanded elusive minors.
    #[arg(long)]
    pub elusive: Option<String>,
    /// Expanded Fulton generators.
    #[arg(long)]
    pub fulton: Option<String>,
    /// JSON file holding an array of polynomials.
    #[arg(long)]
    pub polys: Option<PathBuf>,
    #[arg(long, default_value = "new")]
    pub order: Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LadderWhat {
    Onesided,
    Twosided,
    Tovex,
    Criteria,
}

#[derive(Debug, Args)]
pub struct LadderArgs {
    pub what: LadderWhat,
    /// JSON spec: {"lower":[[a,b],...],"upper":[[c,d],...],"r":[...]}.
    pub spec: PathBuf,
    #[arg(long, default_value = "nwe")]
    pub order: Scan,
    /// Permutation size for `tovex`; defaults to the smallest size that works.
    #[arg(long)]
    pub n: Option<usize>,
    /// List the generators.
    #[arg(long)]
    pub list: bool,
    /// Also run the oracle Gröbner and reducedness checks.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct SelfcheckArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of random permutations.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Permutation size.
    #[arg(long, default_value_t = 5)]
    pub size: usize,
}

/// What a command produced: an exit code plus text and JSON renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self::with_code(EXIT_OK, text, json)
    }

    fn with_code(code: i32, text: String, mut json: Value) -> Self {
        if let Value::Object(map) = &mut json {
            map.insert("schema".into(), json!(SCHEMA_VERSION));
        }
        Self { code, text, json }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json value"),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidMinor(_)
        | Error::InvalidLadder(_)
        | Error::CornerMonotonicity(_)
        | Error::SizeStaircase(_)
        | Error::OutOfRange { .. }
        | Error::Precondition(_) => EXIT_PARSE,
        Error::Unsupported(_) | Error::KindMismatch(_) => EXIT_UNSUPPORTED,
        Error::ScaleGuard { .. } => EXIT_SCALE,
        _ => EXIT_INTERNAL,
    }
}

fn parse_perm(tokens: &[String]) -> Result<Permutation> {
    tokens.join(" ").parse()
}

pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Schubert(a) => schubert_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Ladder(a) => ladder_cmd(a),
        Command::Selfcheck(a) => selfcheck_cmd(a),
    }
}

fn minors_json(ms: &[Minor]) -> Value {
    serde_json::to_value(ms).expect("minors serialize")
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).join("\n")
}

fn rothe_picture(w: &Permutation) -> String {
    let n = w.len();
    let d = permutation::rothe_diagram(w);
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if w.at(i) == j {
                        '*'
                    } else if d.contains(&(i, j)) {
                        'o'
                    } else {
                        '.'
                    }
                })
                .collect::<String>()
        })
        .join("\n")
}

fn schubert_cmd(a: &SchubertArgs) -> Result<Report> {
    let w = parse_perm(&a.perm)?;
    let n = w.len();
    let ord = TermOrder::square(a.order, n.max(1));
    let start = Instant::now();
    let base = json!({ "command": "schubert", "permutation": w, "order": a.order.name() });
    let mut json = base;
    let text = match a.what {
        SchubertWhat::Ess => {
            let ess = permutation::essential_set(&w);
            json["essential"] = serde_json::to_value(&ess).expect("serialize");
            ess.iter().join("; ")
        }
        SchubertWhat::Rothe => {
            let d = permutation::rothe_diagram(&w);
            json["diagram"] = serde_json::to_value(&d).expect("serialize");
            rothe_picture(&w)
        }
        SchubertWhat::Fulton => {
            let f: Vec<Minor> = schubert::fulton_generators(&w).into_iter().map(|g| g.minor).collect();
            json["fulton"] = minors_json(&f);
            if a.stats {
                format!("fulton: {}\ntime_ms: {}", f.len(), start.elapsed().as_millis())
            } else {
                lines(&f)
            }
        }
        SchubertWhat::Elusive => {
            let e: Vec<Minor> = schubert::elusive_minors(&w).into_iter().map(|g| g.minor).collect();
            json["elusive"] = minors_json(&e);
            if a.stats {
                let s = schubert::stats(&w);
                json["stats"] = serde_json::to_value(&s).expect("serialize");
                format!(
                    "elusive: {}\nessential: {}\nfulton: {}\nremoved_terms: {}\ntime_ms: {}",
                    s.elusive,
                    s.essential,
                    s.fulton,
                    s.removed_terms,
                    start.elapsed().as_millis()
                )
            } else {
                lines(&e)
            }
        }
        SchubertWhat::Redgb => {
            let g = schubert::reduced_gb_schubert(&w, &ord)?;
            let elapsed = start.elapsed().as_millis();
            json["basis"] = serde_json::to_value(&g).expect("serialize");
            if a.stats {
                let s = schubert::stats(&w);
                json["stats"] = serde_json::to_value(&s).expect("serialize");
                format!(
                    "basis: {}\nfulton: {}\nelusive: {}\nremoved_terms: {}\ntime_ms: {}",
                    g.len(),
                    s.fulton,
                    s.elusive,
                    s.removed_terms,
                    elapsed
                )
            } else {
                lines(g.iter().map(|e| e.poly.to_text(&ord)))
            }
        }
        SchubertWhat::Wchar => {
            let g = schubert::reduced_gb_polys(&w, &ord)?;
            let c = tri_char::w_characteristic_set(&g, &ord)?;
            let viol = tri_char::normality_violations(&c, &ord)?;
            json["characteristic_set"] = serde_json::to_value(&c).expect("serialize");
            json["normal"] = json!(viol.is_empty());
            json["violations"] = serde_json::to_value(&viol).expect("serialize");
            let mut out: Vec<String> = c
                .leading_vars
                .iter()
                .zip(&c.polys)
                .map(|(v, p)| format!("{v}: {}", p.to_text(&ord)))
                .collect();
            out.push(format!("normal: {}", if viol.is_empty() { "yes" } else { "no" }));
            for (i, v) in &viol {
                out.push(format!("violation: initial of element {} involves {v}", i + 1));
            }
            out.join("\n")
        }
    };
    Ok(Report::ok(text, json))
}

fn verify_target(a: &VerifyArgs, ord_for: impl Fn(usize) -> TermOrder) -> Result<(Vec<Polynomial>, TermOrder, String)> {
    let perm = |s: &str| -> Result<Permutation> { s.parse() };
    if let Some(s) = &a.schubert {
        let w = perm(s)?;
        let ord = ord_for(w.len());
        // no closed form here, so the elusive minors are the candidate
        if ord.kind() == OrderKind::Diagonal && !permutation::is_vexillary(&w) {
            let g = schubert::elusive_minors(&w).iter().map(|f| minor::expand_minor(&f.minor)).collect();
            return Ok((g, ord, format!("schubert {w} (elusive minors)")));
        }
        return Ok((schubert::reduced_gb_polys(&w, &ord)?, ord, format!("schubert {w}")));
    }
    if let Some(s) = &a.elusive {
        let w = perm(s)?;
        let g = schubert::elusive_minors(&w).iter().map(|f| minor::expand_minor(&f.minor)).collect();
        return Ok((g, ord_for(w.len()), format!("elusive {w}")));
    }
    if let Some(s) = &a.fulton {
        let w = perm(s)?;
        let g = schubert::fulton_generators(&w)
            .iter()
            .map(|f| f.minor.clone())
            .unique()
            .map(|m| minor::expand_minor(&m))
            .collect();
        return Ok((g, ord_for(w.len()), format!("fulton {w}")));
    }
    let path = a.polys.as_ref().expect("clap enforces a target");
    let raw = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let g: Vec<Polynomial> = serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let side = g
        .iter()
        .flat_map(|p| p.variables())
        .map(|c| c.row.max(c.col))
        .max()
        .unwrap_or(1);
    Ok((g, ord_for(side), format!("file {}", path.display())))
}

fn verify_cmd(a: &VerifyArgs) -> Result<Report> {
    let (g, ord, target) = verify_target(a, |n| TermOrder::square(a.order, n.max(1)))?;
    let mut json = json!({ "command": "verify", "target": target, "order": a.order.name(), "size": g.len() });
    let (check, pass, detail) = match a.what {
        VerifyWhat::Gb => {
            let rep = oracle::groebner_report(&g, &ord)?;
            json["pairs_total"] = json!(rep.pairs_total);
            json["pairs_skipped_coprime"] = json!(rep.pairs_skipped_coprime);
            let detail = rep.failure.map(|(i, j)| format!("S-polynomial of elements {} and {} does not reduce to 0", i + 1, j + 1));
            ("gb", rep.is_groebner(), detail)
        }
        VerifyWhat::Minimal | VerifyWhat::Reduced => {
            let gb = oracle::groebner_report(&g, &ord)?;
            let audit = if a.what == VerifyWhat::Minimal {
                oracle::minimal_violation(&g, &ord)
            } else {
                oracle::reduced_violation(&g, &ord)
            };
            let detail = match (gb.failure, &audit) {
                (Some((i, j)), _) => Some(format!("not a Gröbner basis: pair {} {}", i + 1, j + 1)),
                (None, Some(v)) => Some(v.to_string()),
                (None, None) => None,
            };
            let name = if a.what == VerifyWhat::Minimal { "minimal" } else { "reduced" };
            (name, detail.is_none(), detail)
        }
        VerifyWhat::Normality => {
            let c = tri_char::w_characteristic_set(&g, &ord)?;
            let viol = tri_char::normality_violations(&c, &ord)?;
            let detail = viol
                .first()
                .map(|(i, v)| format!("initial of element {} involves {v}", i + 1));
            json["violations"] = serde_json::to_value(&viol).expect("serialize");
            ("normality", viol.is_empty(), detail)
        }
        VerifyWhat::Strongpair => {
            let c = tri_char::w_characteristic_set(&g, &ord)?;
            let f = tri_char::strong_pair_failure(&g, &c, &ord)?;
            ("strongpair", f.is_none(), f.map(|i| format!("initial of element {} lies in the ideal", i + 1)))
        }
    };
    json["check"] = json!(check);
    json["pass"] = json!(pass);
    json["detail"] = json!(detail);
    let mut text = format!("{check}: {}", if pass { "pass" } else { "fail" });
    if let Some(d) = detail {
        text.push_str(&format!("\n{d}"));
    }
    Ok(Report::with_code(if pass { EXIT_OK } else { EXIT_FAIL }, text, json))
}

fn read_ladder(path: &PathBuf) -> Result<LadderFile> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn oracle_checks(g: &[Polynomial], ord: &TermOrder, json: &mut Value, out: &mut Vec<String>) -> Result<bool> {
    let gb = oracle::is_groebner(g, ord)?;
    let reduced = gb && oracle::is_reduced_gb(g, ord);
    json["groebner"] = json!(gb);
    json["reduced"] = json!(reduced);
    out.push(format!("groebner: {}", if gb { "yes" } else { "no" }));
    out.push(format!("reduced: {}", if reduced { "yes" } else { "no" }));
    Ok(gb && reduced)
}

fn ladder_cmd(a: &LadderArgs) -> Result<Report> {
    let f = read_ladder(&a.spec)?;
    let (m, n) = f.dims();
    let ord = TermOrder::scanning(a.order, m.max(1), n.max(1));
    let mut json = json!({ "command": "ladder", "spec": f });
    let mut out = Vec::new();
    let mut code = EXIT_OK;
    match a.what {
        LadderWhat::Onesided => {
            let spec = f.one_sided()?;
            let gens = spec.to_blockwise().generators();
            for (i, g) in gens.iter().enumerate() {
                out.push(format!("block {} ({},{}) r={}: {}", i + 1, spec.a[i], spec.b[i], spec.r[i], g.len()));
            }
            let all = spec.to_blockwise().all_generators();
            out.push(format!("generators: {}", all.len()));
            if a.list {
                out.extend(all.iter().map(|m| m.to_string()));
            }
            json["generators"] = minors_json(&all);
            if a.check {
                let p: Vec<Polynomial> = all.iter().map(minor::expand_minor).collect();
                if !oracle_checks(&p, &ord, &mut json, &mut out)? {
                    code = EXIT_FAIL;
                }
            }
        }
        LadderWhat::Twosided => {
            let l = f.ladder()?;
            let groups = ladder::two_sided_generators(&l, &f.r)?;
            for (i, g) in groups.iter().enumerate() {
                out.push(format!("group {} r={}: {}", i + 1, f.r[i], g.len()));
                if a.list {
                    out.extend(g.iter().map(|m| format!("  {m}")));
                }
            }
            json["groups"] = serde_json::to_value(&groups).expect("serialize");
            if a.check {
                let p: Vec<Polynomial> = groups.concat().iter().map(minor::expand_minor).collect();
                if !oracle_checks(&p, &ord, &mut json, &mut out)? {
                    code = EXIT_FAIL;
                }
            }
        }
        LadderWhat::Tovex => {
            let spec = f.one_sided()?;
            let size = a.n.unwrap_or(spec.min_size());
            let w = ladder::ladder_to_vexillary(&spec, size)?;
            let back = ladder::vexillary_to_one_sided(&w)?;
            let matches = back.a == spec.a && back.b == spec.b && back.r == spec.r;
            json["permutation"] = json!(w);
            json["ess_match"] = json!(matches);
            out.push(format!("w: {w}"));
            out.push(format!("ess: {}", permutation::essential_set(&w).iter().join("; ")));
            out.push(format!("ess match: {}", if matches { "yes" } else { "no" }));
            if !matches {
                code = EXIT_FAIL;
            }
        }
        LadderWhat::Criteria => {
            let spec = f.blockwise()?;
            let verdict = |r: Result<ladder::CriterionReport>| -> (String, Value) {
                match r {
                    Ok(rep) => (
                        if rep.holds { "yes".into() } else { "no".into() },
                        serde_json::to_value(&rep).expect("serialize"),
                    ),
                    Err(e) => (format!("n/a ({e})"), json!({ "error": e.to_string() })),
                }
            };
            let rows = [
                ("disjoint_blocks", verdict(Ok(ladder::criterion_disjoint_blocks_report(&spec)))),
                (
                    "disjoint_leading_vars",
                    verdict(ladder::criterion_disjoint_leading_vars_report(&spec, &ord)),
                ),
                ("attend_or_lcm", verdict(Ok(ladder::criterion_attend_or_lcm_report(&spec, &ord)))),
                ("rowcolumn", verdict(ladder::criterion_rowcolumn_report(&spec))),
            ];
            let mut crit = serde_json::Map::new();
            for (name, (t, v)) in rows {
                out.push(format!("{name}: {t}"));
                crit.insert(name.into(), v);
            }
            json["criteria"] = Value::Object(crit);
            if a.check {
                let gb = oracle::is_groebner(&spec.generator_polys(), &ord)?;
                json["groebner"] = json!(gb);
                out.push(format!("groebner: {}", if gb { "yes" } else { "no" }));
            }
        }
    }
    Ok(Report::with_code(code, out.join("\n"), json))
}

fn selfcheck_cmd(a: &SelfcheckArgs) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let ord = TermOrder::square(Scan::New, a.size.max(1));
    let mut bad = Vec::new();
    for _ in 0..a.count {
        let mut v: Vec<usize> = (1..=a.size).collect();
        v.shuffle(&mut rng);
        let w = Permutation::new(v)?;
        let formula = schubert::reduced_gb_polys(&w, &ord)?;
        let elusive: Vec<Polynomial> = schubert::elusive_minors(&w).iter().map(|f| minor::expand_minor(&f.minor)).collect();
        if formula != oracle::inter_reduce(&elusive, &ord)? {
            bad.push(w);
        }
    }
    let pass = bad.is_empty();
    let json = json!({ "command": "selfcheck", "seed": a.seed, "count": a.count, "size": a.size, "mismatches": bad });
    let mut text = format!("checked: {}\nmismatches: {}", a.count, bad.len());
    for w in &bad {
        text.push_str(&format!("\nmismatch: {w}"));
    }
    Ok(Report::with_code(if pass { EXIT_OK } else { EXIT_FAIL }, text, json))
}
