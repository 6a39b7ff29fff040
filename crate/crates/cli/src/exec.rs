use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use purple_ramsey::catalog::{enumerate_ramsey_graphs, load_graph6_catalog, Catalog};
use purple_ramsey::colouring::{
    decode_colouring, encode_colouring, is_st_free, stats_with, PurpleColouring, StatsOptions,
};
use purple_ramsey::constructions::{
    andrasfai, blow_up_colouring, canonical_blowup, canonical_blowup_colouring, canonical_edge_count,
    sprinkled_even_colouring, strong_product_colouring, subsample_colouring, tfp_blowup_colouring,
    tfp_two_phase_colouring, turan_graph, CanonicalBlowupParams, ConstructionReport, Relation,
};
use purple_ramsey::graph::{circulant, clique_number, graph6_decode, graph6_encode, independence_number, Graph};
use purple_ramsey::search::{
    brute_force_g, g_over_catalog, gm_over_catalog, Kind, SearchError, SearchOptions, SearchOutcome,
};

use crate::{
    BaseGraph, CatalogCommand, CatalogSource, CliError, ColourCommand, CommandPlan, Command, GenCommand, KindArg,
    SearchArgs, EXIT_DEADLINE, EXIT_INVALID, EXIT_OK,
};

/// Runs a plan, writing its report to `out`; returns the process exit code.
pub fn execute(plan: &CommandPlan, out: &mut dyn Write) -> Result<i32, CliError> {
    match &plan.command {
        Command::Gen(g) => gen(g, plan.json, out),
        Command::Colour(c) => colour(c, plan.json, out),
        Command::Verify { input, s, t } => verify(input, *s, *t, plan.json, out),
        Command::Gm(a) => search(plan, a, Kind::Matching, out),
        Command::G(a) => search(plan, a, Kind::General, out),
        Command::Enum {
            n,
            s,
            t,
            no_dedup,
            output,
        } => {
            let c = enumerate_ramsey_graphs(*n, *s, *t, !no_dedup)?;
            let list = graph6_list(&c)?;
            match output {
                Some(p) => write_file(p, &list)?,
                None if !plan.json => write!(out, "{list}").map_err(stdout_err)?,
                None => {}
            }
            if plan.json {
                print_json(out, &c.manifest())?;
            } else if output.is_some() {
                writeln!(out, "{} graphs", c.len()).map_err(stdout_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Catalog(c) => {
            let Some(CatalogSource::File(path)) = &plan.source else {
                unreachable!("catalog commands resolve a file")
            };
            let (a, validate) = match c {
                CatalogCommand::Validate(a) => (a, true),
                CatalogCommand::Manifest { catalog, no_validate } => (catalog, !no_validate),
            };
            let cat = load_graph6_catalog(path, a.n, a.s, a.t, validate)?.assert_complete(a.complete);
            let m = cat.manifest();
            if plan.json {
                print_json(out, &m)?;
            } else {
                writeln!(
                    out,
                    "{}: {} graphs, n = {}, s = {}, t = {}, validated = {}, complete = {}\nsha256 {}",
                    path.display(),
                    m.count,
                    m.n,
                    m.s,
                    m.t,
                    m.validated,
                    m.complete,
                    m.checksum
                )
                .map_err(stdout_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { n, s, t, kind, check } => oracle(*n, *s, *t, *kind, *check, plan, out),
    }
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("reports serialise");
    writeln!(out, "{text}").map_err(stdout_err)
}

fn graph6_list(c: &Catalog) -> Result<String, CliError> {
    let mut s = String::new();
    for g in c.graphs() {
        s.push_str(&graph6_encode(g)?);
        s.push('\n');
    }
    Ok(s)
}

fn base_graph(b: &BaseGraph) -> Result<Graph, CliError> {
    if let Some(s) = &b.base_g6 {
        return Ok(graph6_decode(s.trim())?);
    }
    let path = b.base_file.as_ref().expect("clap enforces one base source");
    let text = read_file(path)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| CliError::Validation(format!("{}: no graph6 record", path.display())))?;
    Ok(graph6_decode(line)?)
}

fn read_colouring(path: &Path) -> Result<PurpleColouring, CliError> {
    Ok(decode_colouring(&read_file(path)?)?)
}

fn gen(g: &GenCommand, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let (graph, output) = match g {
        GenCommand::Turan { n, r, out } => (turan_graph(*n, *r)?, &out.output),
        GenCommand::Andrasfai { k, out } => (andrasfai(*k)?, &out.output),
        GenCommand::Circulant { modulus, residues, out } => (circulant(*modulus, residues)?, &out.output),
        GenCommand::Canonical { n, k, t, out } => (canonical_blowup(*n, *k, *t)?.graph, &out.output),
    };
    let g6 = graph6_encode(&graph)?;
    if let Some(p) = output {
        write_file(p, &format!("{g6}\n"))?;
    }
    if json {
        print_json(
            out,
            &json!({ "n": graph.n(), "edges": graph.edge_count(), "graph6": g6 }),
        )?;
    } else if output.is_none() {
        writeln!(out, "{g6}").map_err(stdout_err)?;
    }
    Ok(EXIT_OK)
}

fn colour(c: &ColourCommand, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let (colouring, report, output) = match c {
        ColourCommand::Blowup { base, n, out } => {
            let g = base_graph(base)?;
            let col = blow_up_colouring(&g, *n)?;
            let (k, e) = (g.n() as f64, g.edge_count() as f64);
            let nf = *n as f64;
            let alpha_g = independence_number(&g, None);
            let st = stats_with(&col, StatsOptions::default());
            let r = ConstructionReport::new("blowup", None, st.clone())
                .param("base_graph6", graph6_encode(&g)?)
                .param("n", n)
                .bound("omega_rp", st.omega_rp as f64, Relation::Equal, clique_number(&g, None) as f64)
                .bound(
                    "alpha_r",
                    st.alpha_r as f64,
                    Relation::AtMost,
                    (n.div_ceil(g.n()) * alpha_g) as f64,
                )
                .bound(
                    "purple_deviation",
                    (st.purple as f64 - e * nf * nf / (k * k)).abs(),
                    Relation::AtMost,
                    3.0 * e * nf / k,
                )
                .bound("red", st.red as f64, Relation::AtMost, e * (nf / k + 1.0));
            (col, r, &out.output)
        }
        ColourCommand::Canonical { n, k, t, out } => {
            let col = canonical_blowup_colouring(*n, *k, *t)?;
            let params = CanonicalBlowupParams::new(*n, *k, *t)?;
            let st = stats_with(
                &col,
                StatsOptions {
                    t: Some(t + 1),
                    omega_rp_cutoff: Some(3),
                    omega_bp_cutoff: Some(t + 1),
                },
            );
            let rp = st.red + st.purple;
            let r = ConstructionReport::new("canonical", None, st.clone())
                .param("n", n)
                .param("k", k)
                .param("t", t)
                .param("heavy_size", params.heavy_size)
                .param("light_size", params.light_size)
                .bound("omega_rp", st.omega_rp as f64, Relation::AtMost, 2.0)
                .bound("alpha_r", st.alpha_r as f64, Relation::AtMost, *t as f64)
                .bound("red", st.red as f64, Relation::AtMost, (3 * k * k * n) as f64)
                .bound("edges", rp as f64, Relation::Equal, canonical_edge_count(*n, *k, *t) as f64)
                .bound("purple", st.purple as f64, Relation::Report, (n * t) as f64 / 2.0);
            (col, r, &out.output)
        }
        ColourCommand::StrongProduct { input, ell, out } => {
            let base = read_colouring(input)?;
            let col = strong_product_colouring(&base, *ell)?;
            let base_alpha = independence_number(base.red(), None);
            let st = stats_with(&col, StatsOptions::default());
            let r = ConstructionReport::new("strong_product", None, st.clone())
                .param("ell", ell)
                .param("base_n", base.n())
                .bound("alpha_r", st.alpha_r as f64, Relation::AtMost, base_alpha as f64);
            (col, r, &out.output)
        }
        ColourCommand::Sprinkle {
            core4,
            core3,
            ell,
            p,
            seed,
            out,
        } => {
            let sp = sprinkled_even_colouring(&read_colouring(core4)?, &read_colouring(core3)?, *ell, *p, *seed)?;
            let st = stats_with(&sp.colouring, StatsOptions::default());
            let r = ConstructionReport::new("sprinkle", Some(*seed), st)
                .param("ell", ell)
                .param("p", sp.p)
                .param("cross", &sp.cross);
            (sp.colouring, r, &out.output)
        }
        ColourCommand::Subsample { base, p, seed, out } => {
            let g = base_graph(base)?;
            let col = subsample_colouring(&g, *p, *seed)?;
            let st = stats_with(&col, StatsOptions::default());
            let r = ConstructionReport::new("subsample", Some(*seed), st.clone())
                .param("base_graph6", graph6_encode(&g)?)
                .param("p", p)
                .bound("purple", st.purple as f64, Relation::Report, p * g.edge_count() as f64);
            (col, r, &out.output)
        }
        ColourCommand::Tfp {
            n,
            gamma,
            eps,
            seed,
            out,
        } => {
            let tb = tfp_blowup_colouring(*n, *gamma, *eps, *seed)?;
            let nf = *n as f64;
            let target = gamma * (nf * nf.log2()).sqrt();
            let st = stats_with(
                &tb.colouring,
                StatsOptions {
                    t: Some(target.ceil() as usize),
                    omega_rp_cutoff: Some(3),
                    omega_bp_cutoff: None,
                },
            );
            let r = ConstructionReport::new("tfp", Some(*seed), st.clone())
                .param("n", n)
                .param("gamma", gamma)
                .param("eps", eps)
                .param("zeta", tb.params.zeta)
                .param("k", tb.params.k)
                .param("base_edges", tb.run.edges.len())
                .bound("omega_rp", st.omega_rp as f64, Relation::AtMost, 2.0)
                .bound("alpha_r", st.alpha_r as f64, Relation::Report, target)
                .bound("purple", st.purple as f64, Relation::Report, nf * target / 2.0);
            (tb.colouring, r, &out.output)
        }
        ColourCommand::TfpTwoPhase {
            n,
            eps,
            eps2,
            seed,
            out,
        } => {
            let tp = tfp_two_phase_colouring(*n, *eps, *eps2, *seed)?;
            let nf = *n as f64;
            let target = (std::f64::consts::SQRT_2 + eps) * (nf * nf.log2()).sqrt();
            let st = stats_with(
                &tp.colouring,
                StatsOptions {
                    t: Some(target.ceil() as usize),
                    omega_rp_cutoff: Some(3),
                    omega_bp_cutoff: None,
                },
            );
            let r = ConstructionReport::new("tfp_two_phase", Some(*seed), st.clone())
                .param("n", n)
                .param("eps", eps)
                .param("eps1", tp.eps1)
                .param("eps2", eps2)
                .param("m1", tp.m1)
                .param("m2", tp.m2)
                .bound("purple", st.purple as f64, Relation::Equal, (tp.m2 - tp.m1) as f64)
                .bound("omega_rp", st.omega_rp as f64, Relation::Equal, 2.0)
                .bound("alpha_r", st.alpha_r as f64, Relation::Report, target);
            (tp.colouring, r, &out.output)
        }
    };
    if let Some(p) = output {
        write_file(p, &encode_colouring(&colouring))?;
    }
    if json {
        print_json(out, &report)?;
    } else {
        writeln!(out, "{}", report.construction).map_err(stdout_err)?;
        let st = &report.stats;
        writeln!(
            out,
            "red {} blue {} purple {}\nomega(R+P) {} omega(B+P) {} alpha(R) {}",
            st.red, st.blue, st.purple, st.omega_rp, st.omega_bp, st.alpha_r
        )
        .map_err(stdout_err)?;
        for b in &report.bounds {
            let verdict = match b.holds {
                Some(true) => "ok",
                Some(false) => "FAILED",
                None => "",
            };
            writeln!(
                out,
                "{} = {} {} {} {verdict}",
                b.name,
                b.value,
                serde_json::to_value(b.relation).expect("relation").as_str().unwrap_or(""),
                b.bound
            )
            .map_err(stdout_err)?;
        }
    }
    Ok(if report.all_hold() { EXIT_OK } else { EXIT_INVALID })
}

fn verify(input: &Path, s: usize, t: usize, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let c = read_colouring(input)?;
    let verdict = is_st_free(&c, s, t)?;
    let st = stats_with(
        &c,
        StatsOptions {
            t: Some(t),
            omega_rp_cutoff: Some(s),
            omega_bp_cutoff: Some(t),
        },
    );
    if json {
        print_json(
            out,
            &json!({
                "n": c.n(),
                "s": s,
                "t": t,
                "free": verdict.free,
                "violations": verdict.violations,
                "stats": st,
            }),
        )?;
    } else {
        writeln!(
            out,
            "n {}\nred {} blue {} purple {}\nomega(R+P) {} omega(B+P) {} alpha(R) {}",
            c.n(),
            st.red,
            st.blue,
            st.purple,
            st.omega_rp,
            st.omega_bp,
            st.alpha_r
        )
        .map_err(stdout_err)?;
        for v in &verdict.violations {
            writeln!(out, "violation {:?} {:?}", v.side, v.clique).map_err(stdout_err)?;
        }
        writeln!(out, "({s},{t})-free: {}", verdict.free).map_err(stdout_err)?;
    }
    Ok(if verdict.free { EXIT_OK } else { EXIT_INVALID })
}

fn load(plan: &CommandPlan, a: &SearchArgs) -> Result<Catalog, CliError> {
    let c = match plan.source.as_ref().expect("search commands resolve a source") {
        CatalogSource::Enumerate => enumerate_ramsey_graphs(a.n, a.s, a.t, true)?,
        CatalogSource::File(p) => load_graph6_catalog(p, a.n, a.s, a.t, true)?.assert_complete(a.complete),
    };
    if c.is_empty() {
        return Err(SearchError::EmptyCatalog.into());
    }
    Ok(c)
}

fn options(plan: &CommandPlan, prune: bool) -> SearchOptions {
    SearchOptions {
        threads: plan.threads,
        deadline: plan.deadline.map(|d| Instant::now() + d),
        prune,
    }
}

/// The certificate as a colouring: `R = G - P`, purple `P`.
fn certificate(o: &SearchOutcome) -> Result<PurpleColouring, CliError> {
    let red = o.witness_graph.without_edges(o.witness_purple.iter())?;
    let purple = Graph::from_edges(o.n, o.witness_purple.iter())?;
    Ok(PurpleColouring::from_red_purple(red, purple)?)
}

fn search(plan: &CommandPlan, a: &SearchArgs, kind: Kind, out: &mut dyn Write) -> Result<i32, CliError> {
    let start = Instant::now();
    let c = load(plan, a)?;
    let opts = options(plan, !a.no_prune);
    let o = match kind {
        Kind::Matching => gm_over_catalog(&c, &opts)?,
        Kind::General => g_over_catalog(&c, &opts)?,
    };
    o.verify()?;
    if let Some(p) = &a.certificate {
        write_file(p, &encode_colouring(&certificate(&o)?))?;
    }
    let runtime = a.timing.then(|| start.elapsed().as_millis());
    let report = o.report(runtime);
    if plan.json {
        print_json(out, &report)?;
    } else if a.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        let value = report.value.to_string();
        let (gm, g) = match kind {
            Kind::Matching => (value.as_str(), ""),
            Kind::General => ("", value.as_str()),
        };
        let s = a.s.to_string();
        let t = a.t.to_string();
        let n = a.n.to_string();
        w.write_record(["s", "t", "n", "g_M", "g", "provenance"]).map_err(csv_err)?;
        w.write_record([s.as_str(), &t, &n, gm, g, &report.provenance]).map_err(csv_err)?;
        w.flush().map_err(stdout_err)?;
    } else {
        let name = match kind {
            Kind::Matching => "g_M",
            Kind::General => "g",
        };
        writeln!(
            out,
            "{name}({};{},{}) = {} ({})\nwitness {}\npurple {:?}\ncatalog {} graphs, sha256 {}",
            a.n,
            a.s,
            a.t,
            report.value,
            report.provenance,
            report.witness_graph6,
            report.witness_purple_edges,
            c.len(),
            c.checksum()
        )
        .map_err(stdout_err)?;
        if let Some(ms) = runtime {
            writeln!(out, "runtime {ms} ms").map_err(stdout_err)?;
        }
    }
    Ok(if o.exhausted { EXIT_OK } else { EXIT_DEADLINE })
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e.into(),
    }
}

fn oracle(
    n: usize,
    s: usize,
    t: usize,
    kind: KindArg,
    check: bool,
    plan: &CommandPlan,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let kinds: &[Kind] = match kind {
        KindArg::Matching => &[Kind::Matching],
        KindArg::General => &[Kind::General],
        KindArg::Both => &[Kind::Matching, Kind::General],
    };
    let catalog = if check {
        Some(enumerate_ramsey_graphs(n, s, t, true)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    let mut agree = true;
    for &k in kinds {
        let value = brute_force_g(n, s, t, k)?.map(|b| b.value);
        let searched = match &catalog {
            Some(c) if c.is_empty() => Some(None),
            Some(c) => {
                let opts = options(plan, true);
                let o = match k {
                    Kind::Matching => gm_over_catalog(c, &opts)?,
                    Kind::General => g_over_catalog(c, &opts)?,
                };
                Some(Some(o.value))
            }
            None => None,
        };
        if let Some(v) = searched {
            agree &= v == value;
        }
        rows.push(json!({ "n": n, "s": s, "t": t, "kind": k, "value": value, "search": searched.flatten() }));
    }
    if plan.json {
        print_json(out, &rows)?;
    } else {
        for r in &rows {
            writeln!(
                out,
                "{} ({};{},{}): {}{}",
                r["kind"].as_str().unwrap_or(""),
                n,
                s,
                t,
                r["value"],
                if check { format!(" search {}", r["search"]) } else { String::new() }
            )
            .map_err(stdout_err)?;
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_INVALID })
}
