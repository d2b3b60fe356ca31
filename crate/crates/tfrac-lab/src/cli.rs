//! Command-line front end. Parsing is hand-rolled over a small flag grammar
//! so the binary stays thin; every subcommand delegates to the library and
//! prints JSON by default (CSV or plain text where that is more useful).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::json;

use crate::cfrac::{
    expand_j, expand_s, expand_t, series_to_jfraction, CoeffSeq, JFractionSpec, QuasiAffineSpec,
    SFractionSpec, TFractionSpec,
};
use crate::grammar::{binary_tree_operator, rt_operator};
use crate::oeis::{reproduce_table, sweep, OeisClient, SweepConfig};
use crate::perm::{check_trivariate_conjecture, p4};
use crate::riordan::{lah_production, output_matrix, simple_fraction_via_production, SimpleFamily};
use crate::symbolic::{IndexedSymbol, Poly, Series};
use crate::treepoly::{p_bt, p_irt, p_perm_star, p_rt, q_bt, q_irt, q_rt, q_star_rt};
use crate::treepoly::{MasterWeights, SimpleWeights};
use crate::trees::{
    enumerate_binary, enumerate_irt, enumerate_rt, for_each_binary, for_each_irt, for_each_rt,
    irt_vertex_stats, rt_to_multilabeled, samples, Traversal,
};
use crate::verify::{verify, verify_all, TheoremId, VerifySpec};

pub const USAGE: &str = "\
tfrac-lab <command> [flags]

commands:
  expand      --tfraction quasiaffine:X,Y,U,V,A,B,C,D | --spec-json JSON
              [--order N] [--to-jfraction]
  enumerate   --family binary|rt|irt --n N [--count] [--limit K]
  stats       --sample binary8|rt6|irt16 [--traversal T]
  poly        --which bt|rt|irt|q-bt|q-rt|q-star-rt|q-irt|perm-star --n N
              [--traversal T] [--specialize JSON]
  bijection   --family rt|irt --n N [--traversal T]
  verify      --all | --id THEOREM [--order N] [--traversal T]
  conjecture  --nmax K
  oeis        --table | --sweep first|second [--lookup] [--offline]
  riordan     --family bt|rt --depth N [--csv]
  grammar     iterate --family bt|rt --n N [--all-ones]

global flags: --jobs K (thread cap), --offline (no network)
traversals: preorder, postorder, inorder (binary), lrmr";

/// Minimal flag scanner: `--name value` pairs plus bare words.
struct Args {
    words: Vec<String>,
    flags: BTreeMap<String, String>,
    bools: Vec<String>,
}

const BOOL_FLAGS: &[&str] = &[
    "--count",
    "--all",
    "--offline",
    "--csv",
    "--all-ones",
    "--lookup",
    "--table",
    "--to-jfraction",
    "--online",
];

impl Args {
    fn parse(argv: &[String]) -> Result<Args, String> {
        let mut words = Vec::new();
        let mut flags = BTreeMap::new();
        let mut bools = Vec::new();
        let mut i = 0;
        while i < argv.len() {
            let arg = &argv[i];
            if let Some(name) = arg.strip_prefix("--") {
                if BOOL_FLAGS.contains(&arg.as_str()) {
                    bools.push(name.to_owned());
                } else {
                    let value = argv
                        .get(i + 1)
                        .ok_or_else(|| format!("flag {arg} needs a value"))?;
                    flags.insert(name.to_owned(), value.clone());
                    i += 1;
                }
            } else {
                words.push(arg.clone());
            }
            i += 1;
        }
        Ok(Args {
            words,
            flags,
            bools,
        })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    fn has(&self, name: &str) -> bool {
        self.bools.iter().any(|b| b == name)
    }

    fn usize_flag(&self, name: &str) -> Result<Option<usize>, String> {
        match self.get(name) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| format!("--{name} expects a non-negative integer, got {v}")),
        }
    }

    fn require_usize(&self, name: &str) -> Result<usize, String> {
        self.usize_flag(name)?
            .ok_or_else(|| format!("missing required flag --{name}"))
    }

    fn traversal(&self) -> Result<Traversal, String> {
        match self.get("traversal") {
            None => Ok(Traversal::Preorder),
            Some(v) => Traversal::parse(v).ok_or_else(|| format!("unknown traversal {v}")),
        }
    }
}

/// JSON form of a coefficient sequence: a finite table with optional
/// default, or a quasi-affine 8-tuple rule.
#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffSeqJson {
    Table {
        entries: Vec<String>,
        #[serde(default)]
        default: Option<String>,
    },
    QuasiAffine {
        quasi_affine: [String; 2],
    },
}

#[derive(Deserialize)]
struct SpecJson {
    kind: String,
    #[serde(default)]
    alpha: Option<CoeffSeqJson>,
    #[serde(default)]
    delta: Option<CoeffSeqJson>,
    #[serde(default)]
    gamma: Option<CoeffSeqJson>,
    #[serde(default)]
    beta: Option<CoeffSeqJson>,
    /// Quasi-affine 8-tuple (x,y,u,v,a,b,c,d) covering alpha and delta.
    #[serde(default)]
    quasi_affine: Option<[String; 8]>,
}

fn parse_poly(text: &str) -> Result<Poly, String> {
    Poly::parse(text.trim()).map_err(|e| e.to_string())
}

fn coeff_seq_from_json(j: &CoeffSeqJson) -> Result<CoeffSeq, String> {
    match j {
        CoeffSeqJson::Table { entries, default } => {
            let entries = entries
                .iter()
                .map(|e| parse_poly(e))
                .collect::<Result<Vec<_>, _>>()?;
            let default = match default {
                Some(d) => parse_poly(d)?,
                None => Poly::zero(),
            };
            Ok(CoeffSeq::Table { entries, default })
        }
        CoeffSeqJson::QuasiAffine { quasi_affine } => {
            // the odd/even pair (base, slope): value at block k is
            // base + (k-1) slope
            let base = parse_poly(&quasi_affine[0])?;
            let slope = parse_poly(&quasi_affine[1])?;
            Ok(CoeffSeq::rule(move |i| {
                let k = Poly::constant((i.div_ceil(2)) as i64 - 1);
                &base + &(&k * &slope)
            }))
        }
    }
}

fn quasi_affine_from_parts(parts: &[&str]) -> Result<QuasiAffineSpec, String> {
    if parts.len() != 8 {
        return Err(format!(
            "quasi-affine spec needs 8 entries, got {}",
            parts.len()
        ));
    }
    let polys = parts
        .iter()
        .map(|p| parse_poly(p))
        .collect::<Result<Vec<_>, _>>()?;
    let [x, y, u, v, a, b, c, d]: [Poly; 8] = polys.try_into().unwrap();
    Ok(QuasiAffineSpec {
        x,
        y,
        u,
        v,
        a,
        b,
        c,
        d,
    })
}

fn series_json(s: &Series) -> serde_json::Value {
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_canonical_string()).collect();
    json!({ "order": s.order(), "coefficients": coeffs })
}

fn specialization_from_json(text: &str) -> Result<BTreeMap<IndexedSymbol, Poly>, String> {
    let raw: BTreeMap<String, String> =
        serde_json::from_str(text).map_err(|e| format!("bad specialization JSON: {e}"))?;
    let mut out = BTreeMap::new();
    for (name, value) in raw {
        // symbol keys reuse the canonical text form, e.g. "x1" or "a(0,1)"
        let sym_poly = parse_poly(&name)?;
        let mut symbols = sym_poly.symbols();
        if symbols.len() != 1 {
            return Err(format!("specialization key {name} is not a single symbol"));
        }
        out.insert(symbols.remove(0), parse_poly(&value)?);
    }
    Ok(out)
}

fn cmd_expand(args: &Args) -> Result<serde_json::Value, String> {
    let order = args.usize_flag("order")?.unwrap_or(7);
    if let Some(text) = args.get("tfraction") {
        let spec = match text.strip_prefix("quasiaffine:") {
            Some(rest) => quasi_affine_from_parts(&rest.split(',').collect::<Vec<_>>())?,
            None => return Err("expected --tfraction quasiaffine:X,...".into()),
        };
        let series = expand_t(&crate::cfrac::quasi_affine(&spec), order);
        let mut out = json!({ "fraction": "t", "series": series_json(&series) });
        if args.has("to-jfraction") {
            let table = series_to_jfraction(&series, order / 2).map_err(|e| e.to_string())?;
            out["jfraction"] = json!({
                "gammas": table.gammas.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "betas": table.betas.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                "terminated": table.terminated,
            });
        }
        return Ok(out);
    }
    let text = args
        .get("spec-json")
        .ok_or("expand needs --tfraction or --spec-json")?;
    let spec: SpecJson = serde_json::from_str(text).map_err(|e| format!("bad spec JSON: {e}"))?;
    let series = match spec.kind.as_str() {
        "t" => {
            if let Some(qa) = &spec.quasi_affine {
                let parts: Vec<&str> = qa.iter().map(String::as_str).collect();
                let qa = quasi_affine_from_parts(&parts)?;
                expand_t(&crate::cfrac::quasi_affine(&qa), order)
            } else {
                let alpha = coeff_seq_from_json(spec.alpha.as_ref().ok_or("missing alpha")?)?;
                let delta = coeff_seq_from_json(spec.delta.as_ref().ok_or("missing delta")?)?;
                expand_t(&TFractionSpec { alpha, delta }, order)
            }
        }
        "j" => {
            let gamma = coeff_seq_from_json(spec.gamma.as_ref().ok_or("missing gamma")?)?;
            let beta = coeff_seq_from_json(spec.beta.as_ref().ok_or("missing beta")?)?;
            expand_j(&JFractionSpec { gamma, beta }, order)
        }
        "s" => {
            let alpha = coeff_seq_from_json(spec.alpha.as_ref().ok_or("missing alpha")?)?;
            expand_s(&SFractionSpec { alpha }, order)
        }
        other => return Err(format!("unknown fraction kind {other}")),
    };
    Ok(json!({ "fraction": spec.kind, "series": series_json(&series) }))
}

fn cmd_enumerate(args: &Args) -> Result<serde_json::Value, String> {
    let family = args.get("family").ok_or("enumerate needs --family")?;
    let n = args.require_usize("n")?;
    let count_only = args.has("count");
    let limit = args.usize_flag("limit")?.unwrap_or(50);
    match family {
        "binary" => {
            if count_only {
                let mut c = 0u64;
                for_each_binary(n, &mut |_| c += 1);
                return Ok(json!({ "family": family, "n": n, "count": c }));
            }
            let trees: Vec<String> = enumerate_binary(n)
                .iter()
                .take(limit)
                .map(|t| t.to_string())
                .collect();
            Ok(json!({ "family": family, "n": n, "trees": trees }))
        }
        "rt" => {
            if count_only {
                let mut c = 0u64;
                for_each_rt(n, &mut |_| c += 1);
                return Ok(json!({ "family": family, "n": n, "count": c }));
            }
            let trees: Vec<String> = enumerate_rt(n)
                .iter()
                .take(limit)
                .map(|t| t.to_string())
                .collect();
            Ok(json!({ "family": family, "n": n, "trees": trees }))
        }
        "irt" => {
            if count_only {
                let mut c = 0u64;
                for_each_irt(n, &mut |_| c += 1);
                return Ok(json!({ "family": family, "n": n, "count": c }));
            }
            let trees: Vec<String> = enumerate_irt(n)
                .iter()
                .take(limit)
                .map(|t| t.to_string())
                .collect();
            Ok(json!({ "family": family, "n": n, "trees": trees }))
        }
        other => Err(format!("unknown family {other}")),
    }
}

fn cmd_stats(args: &Args) -> Result<serde_json::Value, String> {
    let sample = args.get("sample").unwrap_or("binary8");
    match sample {
        "binary8" => {
            let t = samples::sample_binary_8();
            let alg = match args.get("traversal") {
                None => Traversal::Inorder,
                Some(v) => Traversal::parse(v).ok_or_else(|| format!("unknown traversal {v}"))?,
            };
            let stats = crate::trees::all_vertex_stats(&t, alg).map_err(|e| e.to_string())?;
            let rows: Vec<_> = stats
                .iter()
                .map(|(v, s)| {
                    json!({
                        "vertex": v,
                        "node_type": s.node_type,
                        "lev": s.lev,
                        "croix": s.croix,
                        "nid": s.nid,
                    })
                })
                .collect();
            Ok(
                json!({ "sample": sample, "traversal": alg.name(), "tree": t.to_string(), "rows": rows }),
            )
        }
        "rt6" => {
            let t = samples::sample_rt_6();
            let alg = args.traversal()?;
            let stats = crate::trees::all_vertex_stats(&t, alg).map_err(|e| e.to_string())?;
            let rows: Vec<_> = stats
                .iter()
                .map(|(v, s)| {
                    json!({
                        "vertex": v,
                        "node_type": s.node_type,
                        "lev": s.lev,
                        "croix": s.croix,
                        "nid": s.nid,
                    })
                })
                .collect();
            let ml = rt_to_multilabeled(&t);
            Ok(json!({
                "sample": sample,
                "traversal": alg.name(),
                "tree": t.to_string(),
                "multilabeled": ml.to_string(),
                "rows": rows,
            }))
        }
        "irt16" => {
            let t = samples::sample_irt_16();
            let alg = args.traversal()?;
            let stats = irt_vertex_stats(&t, alg).map_err(|e| e.to_string())?;
            let rows: Vec<_> = (0..t.num_vertices())
                .map(|i| {
                    let s = &stats[&i];
                    let v = t.vertex(i);
                    json!({
                        "labels": format!("{}..{}", v.lo, v.hi),
                        "node_type": s.node_type,
                        "lev": s.lev,
                        "croix": s.croix,
                        "nid": s.nid,
                        "surplus": s.label_surplus,
                    })
                })
                .collect();
            let path = crate::biject::irt_to_labeled_schroder(&t, alg);
            Ok(json!({
                "sample": sample,
                "traversal": alg.name(),
                "tree": t.to_string(),
                "path": path.path.render(),
                "rows": rows,
            }))
        }
        other => Err(format!("unknown sample {other}")),
    }
}

fn cmd_poly(args: &Args) -> Result<serde_json::Value, String> {
    let which = args.get("which").ok_or("poly needs --which")?;
    let n = args.require_usize("n")?;
    let alg = args.traversal()?;
    let sw = SimpleWeights::symbolic();
    let mw = MasterWeights::symbolic();
    let mut poly = match which {
        "bt" => p_bt(n, &sw),
        "rt" => p_rt(n, &sw),
        "irt" => p_irt(n, &sw),
        "q-bt" => q_bt(
            n,
            &mw,
            if args.get("traversal").is_none() {
                Traversal::Inorder
            } else {
                alg
            },
        ),
        "q-rt" => q_rt(n, &mw, alg),
        "q-star-rt" => q_star_rt(n, &mw, alg),
        "q-irt" => q_irt(n, &mw, alg),
        "perm-star" => p_perm_star(n, &mw),
        other => return Err(format!("unknown polynomial {other}")),
    };
    if let Some(spec_text) = args.get("specialize") {
        let assignment = specialization_from_json(spec_text)?;
        poly = poly.specialize(&assignment);
    }
    Ok(json!({
        "which": which,
        "n": n,
        "terms": poly.num_terms(),
        "poly": poly.to_canonical_string(),
    }))
}

fn cmd_bijection(args: &Args) -> Result<(serde_json::Value, bool), String> {
    let family = args.get("family").ok_or("bijection needs --family")?;
    let n = args.require_usize("n")?;
    let alg = args.traversal()?;
    let mut checked = 0u64;
    let mut ok = true;
    match family {
        "rt" => {
            for t in enumerate_rt(n) {
                let lp = crate::biject::rt_to_labeled_motzkin(&t, alg);
                let back =
                    crate::biject::labeled_motzkin_to_rt(&lp, alg).map_err(|e| e.to_string())?;
                checked += 1;
                if back != t {
                    ok = false;
                    break;
                }
            }
        }
        "irt" => {
            for t in enumerate_irt(n) {
                let lp = crate::biject::irt_to_labeled_schroder(&t, alg);
                let back =
                    crate::biject::labeled_schroder_to_irt(&lp, alg).map_err(|e| e.to_string())?;
                checked += 1;
                if back != t {
                    ok = false;
                    break;
                }
            }
        }
        other => return Err(format!("unknown family {other}")),
    }
    Ok((
        json!({
            "family": family,
            "n": n,
            "traversal": alg.name(),
            "roundtrips": checked,
            "pass": ok,
        }),
        ok,
    ))
}

fn cmd_verify(args: &Args) -> Result<(serde_json::Value, bool), String> {
    let reports = if args.has("all") {
        verify_all()
    } else {
        let id_text = args.get("id").ok_or("verify needs --all or --id")?;
        let theorem =
            TheoremId::parse(id_text).ok_or_else(|| format!("unknown theorem id {id_text}"))?;
        vec![verify(&VerifySpec {
            theorem,
            order: args.usize_flag("order")?,
            traversal: match args.get("traversal") {
                None => None,
                Some(v) => {
                    Some(Traversal::parse(v).ok_or_else(|| format!("unknown traversal {v}"))?)
                }
            },
        })]
    };
    let pass = reports.iter().all(|r| r.pass);
    Ok((
        json!({
            "pass": pass,
            "reports": reports,
        }),
        pass,
    ))
}

fn cmd_conjecture(args: &Args) -> Result<(serde_json::Value, bool), String> {
    let nmax = args.require_usize("nmax")?;
    let mut rows = Vec::new();
    let mut all_pass = true;
    for n in 0..=nmax {
        let start = std::time::Instant::now();
        let report = check_trivariate_conjecture_single(n);
        all_pass &= report;
        rows.push(json!({
            "n": n,
            "pass": report,
            "wall_ms": start.elapsed().as_millis() as u64,
        }));
    }
    Ok((json!({ "pass": all_pass, "rows": rows }), all_pass))
}

fn check_trivariate_conjecture_single(n: usize) -> bool {
    // delegate to the cumulative checker for one value of n
    if n == 0 {
        return check_trivariate_conjecture(0).pass;
    }
    let base = p4(n);
    let one = |poly: &Poly, var: &str| {
        let mut assign = BTreeMap::new();
        assign.insert(IndexedSymbol::plain(var), Poly::one());
        poly.specialize(&assign)
    };
    let swap = |poly: &Poly, images: [&str; 4]| {
        let mut assign = BTreeMap::new();
        for (from, to) in ["p", "q", "r", "s"].iter().zip(images) {
            assign.insert(IndexedSymbol::plain(from), Poly::v(to));
        }
        poly.specialize(&assign)
    };
    one(&base, "p") == one(&swap(&base, ["p", "q", "s", "r"]), "p")
        && one(&base, "q") == one(&swap(&base, ["p", "q", "s", "r"]), "q")
        && one(&base, "r") == one(&swap(&base, ["q", "p", "r", "s"]), "r")
        && one(&base, "s") == one(&swap(&base, ["q", "p", "r", "s"]), "s")
}

fn cmd_oeis(args: &Args) -> Result<(serde_json::Value, bool), String> {
    let offline = args.has("offline") || !args.has("online");
    let cache_dir = std::env::var_os(crate::oeis::CACHE_DIR_ENV).map(std::path::PathBuf::from);
    let client = OeisClient::new(cache_dir, offline);
    if args.has("table") {
        let rows = reproduce_table(&client).map_err(|e| e.to_string())?;
        let pass = rows.iter().all(|r| r.terms_match && r.lookup_contains);
        return Ok((json!({ "pass": pass, "rows": rows }), pass));
    }
    let which = args.get("sweep").ok_or("oeis needs --table or --sweep")?;
    let config = match which {
        "first" => SweepConfig::first_sweep(),
        "second" => SweepConfig::second_sweep(),
        other => return Err(format!("unknown sweep {other}")),
    };
    let rows = sweep(&config);
    let do_lookup = args.has("lookup");
    let mut out_rows = Vec::new();
    for (params, seq) in &rows {
        let terms: Vec<String> = seq.iter().map(BigInt::to_string).collect();
        let mut row = json!({ "params": params, "terms": terms });
        if do_lookup {
            match client.lookup(seq, config.drop_first) {
                Ok(hits) => row["matches"] = json!(hits),
                Err(crate::oeis::OeisError::NetworkUnavailable(_)) => row["matches"] = json!([]),
                Err(e) => return Err(e.to_string()),
            }
        }
        out_rows.push(row);
    }
    Ok((
        json!({ "sweep": which, "tuples": rows.len(), "rows": out_rows }),
        true,
    ))
}

fn cmd_riordan(args: &Args) -> Result<serde_json::Value, String> {
    let family = match args.get("family").ok_or("riordan needs --family")? {
        "bt" => SimpleFamily::Binary,
        "rt" => SimpleFamily::RestrictedTernary,
        other => return Err(format!("unknown family {other}")),
    };
    let depth = args.usize_flag("depth")?.unwrap_or(6);
    let w = SimpleWeights::symbolic();
    let p = lah_production(&crate::riordan::family_phi(family, &w), depth);
    let (lead, spec) =
        simple_fraction_via_production(family, &w, depth).map_err(|e| e.to_string())?;
    let gammas: Vec<String> = (0..depth)
        .map(|n| spec.gamma_at(n).to_canonical_string())
        .collect();
    let betas: Vec<String> = (1..depth)
        .map(|n| spec.beta_at(n).to_canonical_string())
        .collect();
    let mut out = json!({
        "family": format!("{family:?}"),
        "leading": lead.to_canonical_string(),
        "gammas": gammas,
        "betas": betas,
    });
    if args.has("csv") {
        let triangle = output_matrix(&p, depth);
        out["production_csv"] = json!(p.to_csv());
        out["output_csv"] = json!(triangle.to_csv());
    }
    Ok(out)
}

fn cmd_grammar(args: &Args) -> Result<serde_json::Value, String> {
    if args.words.get(1).map(String::as_str) != Some("iterate") {
        return Err("grammar supports: grammar iterate --family bt|rt --n N".into());
    }
    let n = args.require_usize("n")?;
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    let op = match args.get("family").ok_or("grammar needs --family")? {
        "bt" => binary_tree_operator(),
        "rt" => rt_operator(),
        other => return Err(format!("unknown family {other}")),
    };
    let mut poly = op.iterate(&Poly::v("y1"), n - 1);
    if args.has("all-ones") {
        let ones: BTreeMap<IndexedSymbol, Poly> = ["x1", "x2", "y1", "y2", "w"]
            .iter()
            .map(|v| (IndexedSymbol::plain(v), Poly::one()))
            .collect();
        poly = poly.specialize(&ones);
    }
    Ok(json!({ "n": n, "poly": poly.to_canonical_string() }))
}

/// Run the CLI; returns the process exit status.
pub fn run(argv: &[String]) -> i32 {
    let args = match Args::parse(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}\n\n{USAGE}");
            return 2;
        }
    };
    if let Some(jobs) = args.flags.get("jobs") {
        if let Ok(k) = jobs.parse::<usize>() {
            // ignore failure: the global pool may already exist in-process
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    }
    let command = match args.words.first() {
        Some(c) => c.as_str(),
        None => {
            eprintln!("{USAGE}");
            return 2;
        }
    };
    let outcome: Result<(serde_json::Value, bool), String> = match command {
        "expand" => cmd_expand(&args).map(|v| (v, true)),
        "enumerate" => cmd_enumerate(&args).map(|v| (v, true)),
        "stats" => cmd_stats(&args).map(|v| (v, true)),
        "poly" => cmd_poly(&args).map(|v| (v, true)),
        "bijection" => cmd_bijection(&args),
        "verify" => cmd_verify(&args),
        "conjecture" => cmd_conjecture(&args),
        "oeis" => cmd_oeis(&args),
        "riordan" => cmd_riordan(&args).map(|v| (v, true)),
        "grammar" => cmd_grammar(&args).map(|v| (v, true)),
        other => {
            eprintln!("error: unknown command {other}\n\n{USAGE}");
            return 2;
        }
    };
    match outcome {
        Ok((value, pass)) => {
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}\n\n{USAGE}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_json(argv: &[&str]) -> (serde_json::Value, i32) {
        let args: Vec<String> = argv.iter().map(|s| s.to_string()).collect();
        let parsed = Args::parse(&args).unwrap();
        let command = parsed.words.first().unwrap().as_str();
        let outcome = match command {
            "expand" => cmd_expand(&parsed).map(|v| (v, true)),
            "enumerate" => cmd_enumerate(&parsed).map(|v| (v, true)),
            "stats" => cmd_stats(&parsed).map(|v| (v, true)),
            "poly" => cmd_poly(&parsed).map(|v| (v, true)),
            "bijection" => cmd_bijection(&parsed),
            "verify" => cmd_verify(&parsed),
            "conjecture" => cmd_conjecture(&parsed),
            "oeis" => cmd_oeis(&parsed),
            "riordan" => cmd_riordan(&parsed).map(|v| (v, true)),
            "grammar" => cmd_grammar(&parsed).map(|v| (v, true)),
            _ => Err("unknown".into()),
        };
        match outcome {
            Ok((v, pass)) => (v, if pass { 0 } else { 1 }),
            Err(e) => (json!({ "error": e }), 2),
        }
    }

    #[test]
    fn expand_quasi_affine_all_ones() {
        let (v, code) = run_json(&[
            "expand",
            "--tfraction",
            "quasiaffine:1,1,1,1,1,1,1,1",
            "--order",
            "6",
        ]);
        assert_eq!(code, 0);
        let coeffs: Vec<String> = v["series"]["coefficients"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap().to_owned())
            .collect();
        assert_eq!(coeffs, vec!["1", "2", "6", "24", "124", "800", "6208"]);
    }

    #[test]
    fn expand_spec_json_table() {
        let spec = r#"{"kind":"s","alpha":{"entries":["1","1","2","2","3","3"],"default":"0"}}"#;
        let (v, code) = run_json(&["expand", "--spec-json", spec, "--order", "5"]);
        assert_eq!(code, 0);
        assert_eq!(v["series"]["coefficients"][4], "24");
    }

    #[test]
    fn expand_recovers_jfraction() {
        let (v, code) = run_json(&[
            "expand",
            "--tfraction",
            "quasiaffine:1,1,1,1,0,1,0,1",
            "--order",
            "10",
            "--to-jfraction",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["jfraction"]["gammas"][0], "1");
        assert_eq!(v["jfraction"]["betas"][0], "2");
    }

    #[test]
    fn enumerate_counts() {
        let (v, code) = run_json(&["enumerate", "--family", "irt", "--n", "2", "--count"]);
        assert_eq!(code, 0);
        assert_eq!(v["count"], 6);
        let (v, _) = run_json(&["enumerate", "--family", "binary", "--n", "3", "--count"]);
        assert_eq!(v["count"], 6);
        let (v, _) = run_json(&["enumerate", "--family", "rt", "--n", "4", "--count"]);
        assert_eq!(v["count"], 51);
    }

    #[test]
    fn stats_tables() {
        let (v, code) = run_json(&["stats", "--sample", "binary8"]);
        assert_eq!(code, 0);
        assert_eq!(v["rows"].as_array().unwrap().len(), 8);
        let (v, code) = run_json(&["stats", "--sample", "irt16", "--traversal", "lrmr"]);
        assert_eq!(code, 0);
        assert_eq!(v["rows"].as_array().unwrap().len(), 13);
    }

    #[test]
    fn poly_with_specialization() {
        let (v, code) = run_json(&[
            "poly",
            "--which",
            "rt",
            "--n",
            "4",
            "--specialize",
            r#"{"x1":"1","x2":"1","y1":"1","y2":"1","w":"1"}"#,
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["poly"], "51");
    }

    #[test]
    fn bijection_roundtrips() {
        let (v, code) = run_json(&["bijection", "--family", "rt", "--n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(v["pass"], true);
        assert_eq!(v["roundtrips"], 51);
    }

    #[test]
    fn verify_single_id() {
        let (v, code) = run_json(&["verify", "--id", "cor-rt-counts", "--order", "6"]);
        assert_eq!(code, 0);
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn conjecture_small() {
        let (v, code) = run_json(&["conjecture", "--nmax", "5"]);
        assert_eq!(code, 0);
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn oeis_table_offline() {
        let (v, code) = run_json(&["oeis", "--table", "--offline"]);
        assert_eq!(code, 0);
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn riordan_fraction() {
        let (v, code) = run_json(&["riordan", "--family", "rt", "--depth", "4", "--csv"]);
        assert_eq!(code, 0);
        assert_eq!(v["gammas"][1], "2*w + 2*x2 + 2*y2");
    }

    #[test]
    fn grammar_iterate() {
        let (v, code) = run_json(&[
            "grammar",
            "iterate",
            "--family",
            "rt",
            "--n",
            "4",
            "--all-ones",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["poly"], "51");
    }

    #[test]
    fn usage_errors() {
        let (_, code) = run_json(&["enumerate", "--family", "klein-bottle", "--n", "2"]);
        assert_eq!(code, 2);
        let (_, code) = run_json(&["verify", "--id", "not-a-theorem"]);
        assert_eq!(code, 2);
    }
}
