//! Command implementations, independent of argument parsing so that tests
//! can drive them directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use tutte_toughness::barrier::{analyze, BarrierLedger};
use tutte_toughness::generators::{CorpusEntry, GeneratorKind, GeneratorSpec, NamedBase};
use tutte_toughness::toughness::ToughnessResult;
use tutte_toughness::two_factor::{biased_barrier, classify_components, extract_two_factor, is_hamiltonian};
use tutte_toughness::{has_two_factor, toughness, BarrierPair, Graph, PlanarEmbedding, TwoFactor, TwoFactorDecision};

use crate::error::CliError;
use crate::format::{write_graph6, write_instance, Instance};

/// Knobs shared by the batch commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Cap for exhaustive searches (barriers, Hamiltonicity).
    pub guard: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            guard: tutte_toughness::two_factor::DEFAULT_GUARD,
            jobs: 0,
        }
    }
}

pub(crate) fn run_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// A named instance to validate.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub id: String,
    pub graph: Graph,
    pub embedding: Option<PlanarEmbedding>,
    pub generator: Option<GeneratorSpec>,
}

impl From<CorpusEntry> for CorpusItem {
    fn from(e: CorpusEntry) -> Self {
        CorpusItem {
            id: e.id,
            graph: e.graph,
            embedding: Some(e.embedding),
            generator: e.generator,
        }
    }
}

/// Generator families the default corpus cycles through.
pub const FAMILIES: [&str; 4] = ["apollonian", "random-flip", "stellation", "stellation-base"];

/// Spec for the `i`-th default corpus entry.
pub fn corpus_spec(i: usize, min_n: usize, max_n: usize, seed: u64) -> GeneratorSpec {
    let span = (max_n - min_n + 1) as u64;
    let entry_seed = seed.wrapping_add(i as u64).wrapping_mul(0x2545_f491_4f6c_dd1d);
    let round = i / FAMILIES.len();
    let n = min_n + ((round as u64 + (entry_seed >> 32)) % span) as usize;
    let (kind, base) = match i % FAMILIES.len() {
        0 => (GeneratorKind::Apollonian, None),
        1 => (GeneratorKind::RandomFlip { flips: 3 * n }, None),
        2 => (GeneratorKind::Stellation, None),
        _ => {
            let base = match n {
                4..=5 => Some(NamedBase::Tetrahedron),
                6..=11 => Some(NamedBase::Octahedron),
                12..=32 => Some(NamedBase::Icosahedron),
                _ => None,
            };
            (GeneratorKind::Stellation, base)
        }
    };
    GeneratorSpec {
        kind,
        n,
        seed: entry_seed,
        base,
    }
}

/// `count` seeded triangulations with `min_n <= n <= max_n`, round-robin
/// over [`FAMILIES`].
pub fn default_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Result<Vec<CorpusItem>, CliError> {
    if min_n < 4 || min_n > max_n {
        return Err(CliError::Usage(format!("need 4 <= min-n <= max-n, got {min_n}..{max_n}")));
    }
    (0..count)
        .map(|i| {
            let spec = corpus_spec(i, min_n, max_n, seed);
            let (graph, emb) = spec.generate()?;
            Ok(CorpusItem {
                id: format!("{}-{i:05}", FAMILIES[i % FAMILIES.len()]),
                graph,
                embedding: Some(emb),
                generator: Some(spec),
            })
        })
        .collect()
}

/// Annotates a corpus in parallel, sorted by id.
pub fn annotate_corpus(items: Vec<CorpusItem>, opts: Options) -> Result<Vec<CorpusEntry>, CliError> {
    let guard = opts.guard;
    let mut out = run_pool(opts.jobs, move || {
        items
            .into_par_iter()
            .map(|it| {
                let emb = match it.embedding {
                    Some(e) => e,
                    None => PlanarEmbedding::new(vec![Vec::new(); it.graph.vertex_count()]),
                };
                CorpusEntry::annotate(it.id, it.graph, emb, it.generator, guard)
            })
            .collect::<Result<Vec<_>, _>>()
    })??;
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Condensed view of a barrier ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerSummary {
    pub s: usize,
    pub t: usize,
    pub delta: i64,
    pub biased_properties: bool,
    pub c3: usize,
    pub q: usize,
    pub s_star: usize,
    pub m: usize,
    pub p: usize,
    pub df: usize,
    pub h_invariants: bool,
    pub deficiency_bound: bool,
    pub m_star_properties: bool,
    pub c3_bound: bool,
    pub cutset_size: usize,
    pub cutset_lower_bound: bool,
    pub cutset_ratio: Option<String>,
    pub walks_hold: Option<bool>,
}

impl LedgerSummary {
    pub fn of(l: &BarrierLedger) -> Self {
        let so = &l.stage_one;
        LedgerSummary {
            s: l.barrier.s.len(),
            t: l.barrier.t.len(),
            delta: l.barrier.delta,
            biased_properties: l.properties.all_hold(),
            c3: l.classification.c3(),
            q: so.q(),
            s_star: so.s_star(),
            m: so.m_count,
            p: l.classification.p,
            df: so.deficiency_bound.df,
            h_invariants: l.h_invariants.all_hold(),
            deficiency_bound: so.deficiency_bound.holds,
            m_star_properties: so.matching_properties_hold(),
            c3_bound: l.c3.holds,
            cutset_size: l.cutset.s_prime.len(),
            cutset_lower_bound: l.cutset.lower_bound_holds,
            cutset_ratio: l.cutset.ratio.as_ref().map(ToString::to_string),
            walks_hold: (!l.walks.is_empty()).then(|| l.walks.iter().all(|w| w.holds)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationRecord {
    pub id: String,
    pub n: usize,
    pub e: usize,
    pub toughness: String,
    pub dist_condition: bool,
    pub two_factor: bool,
    pub hamiltonian: Option<bool>,
    pub hypotheses: bool,
    pub generator: Option<GeneratorSpec>,
    /// Biased barrier, for instances without a 2-factor.
    pub barrier: Option<BarrierPair>,
    pub ledger: Option<LedgerSummary>,
    /// Why the ledger is missing for an instance without a 2-factor.
    pub ledger_error: Option<String>,
}

/// A refutation-grade artifact: satisfies the hypotheses, has no 2-factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub id: String,
    pub graph6: String,
    pub instance: String,
    pub barrier: Option<BarrierPair>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub instances: usize,
    pub two_factor: usize,
    pub no_two_factor: usize,
    pub hamiltonian: usize,
    pub hamiltonian_checked: usize,
    pub tough_three_halves: usize,
    pub dist_condition: usize,
    /// Entries with `τ >= 3/2` and the dist-condition.
    pub hypotheses_satisfied: usize,
    pub hypotheses_with_two_factor: usize,
    pub ledgers: usize,
    pub ledger_failures: usize,
    pub c3_bound_pass: usize,
    pub cutset_bound_pass: usize,
    pub counterexamples: usize,
    pub by_family: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub records: Vec<ValidationRecord>,
    pub aggregate: Aggregate,
    pub counterexamples: Vec<Counterexample>,
}

fn family(g: &Option<GeneratorSpec>) -> String {
    match g {
        None => "file".into(),
        Some(s) => match (s.kind, s.base) {
            (GeneratorKind::Apollonian, _) => "apollonian".into(),
            (GeneratorKind::RandomFlip { .. }, _) => "random-flip".into(),
            (GeneratorKind::Stellation, None) => "stellation".into(),
            (GeneratorKind::Stellation, Some(_)) => "stellation-base".into(),
        },
    }
}

fn validate_one(entry: &CorpusEntry, guard: usize) -> ValidationRecord {
    let meta = &entry.meta;
    let mut barrier = None;
    let mut ledger = None;
    let mut ledger_error = None;
    if !meta.two_factor {
        let emb = (entry.embedding.rotation.len() == meta.n
            && entry.embedding.validate(&entry.graph).is_ok())
        .then_some(&entry.embedding);
        match analyze(&entry.graph, emb, guard) {
            Ok(l) => {
                ledger = Some(LedgerSummary::of(&l));
                barrier = Some(l.barrier);
            }
            Err(e) => {
                barrier = biased_barrier(&entry.graph, guard).ok();
                ledger_error = Some(e.to_string());
            }
        }
    }
    ValidationRecord {
        id: entry.id.clone(),
        n: meta.n,
        e: meta.e,
        toughness: meta.toughness.to_string(),
        dist_condition: meta.dist_condition,
        two_factor: meta.two_factor,
        hamiltonian: meta.hamiltonian,
        hypotheses: entry.satisfies_hypotheses(),
        generator: entry.generator,
        barrier,
        ledger,
        ledger_error,
    }
}

/// Checks "hypotheses imply a 2-factor" on every entry and records the
/// barrier ledger of each instance without a 2-factor.
pub fn validate(items: Vec<CorpusItem>, opts: Options) -> Result<ValidationReport, CliError> {
    let entries = annotate_corpus(items, opts)?;
    let guard = opts.guard;
    let records: Vec<ValidationRecord> =
        run_pool(opts.jobs, || entries.par_iter().map(|e| validate_one(e, guard)).collect())?;

    let mut agg = Aggregate {
        instances: records.len(),
        ..Default::default()
    };
    let mut counterexamples = Vec::new();
    let three_halves = tutte_toughness::ExactRational::new(3, 2);
    for (entry, r) in entries.iter().zip(&records) {
        agg.two_factor += usize::from(r.two_factor);
        agg.no_two_factor += usize::from(!r.two_factor);
        agg.hamiltonian += usize::from(r.hamiltonian == Some(true));
        agg.hamiltonian_checked += usize::from(r.hamiltonian.is_some());
        agg.tough_three_halves += usize::from(entry.meta.toughness.at_least(&three_halves));
        agg.dist_condition += usize::from(r.dist_condition);
        agg.hypotheses_satisfied += usize::from(r.hypotheses);
        agg.hypotheses_with_two_factor += usize::from(r.hypotheses && r.two_factor);
        agg.ledgers += usize::from(r.ledger.is_some());
        agg.ledger_failures += usize::from(r.ledger_error.is_some());
        if let Some(l) = &r.ledger {
            agg.c3_bound_pass += usize::from(l.c3_bound);
            agg.cutset_bound_pass += usize::from(l.cutset_lower_bound);
        }
        *agg.by_family.entry(family(&r.generator)).or_default() += 1;
        if r.hypotheses && !r.two_factor {
            let inst = Instance::new(entry.graph.clone());
            let inst = if entry.embedding.rotation.len() == r.n {
                inst.with_embedding(entry.embedding.clone())
            } else {
                inst
            };
            counterexamples.push(Counterexample {
                id: r.id.clone(),
                graph6: write_graph6(&entry.graph),
                instance: write_instance(&inst),
                barrier: r.barrier.clone(),
            });
        }
    }
    agg.counterexamples = counterexamples.len();
    Ok(ValidationReport {
        records,
        aggregate: agg,
        counterexamples,
    })
}

/// Outcome of `ledger`: either the 2-factor that makes a barrier
/// impossible, or the full ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LedgerOutcome {
    TwoFactorExists { two_factor: TwoFactor, cycles: Vec<Vec<usize>> },
    Ledger(Box<BarrierLedger>),
}

pub fn cmd_ledger(inst: &Instance, opts: Options) -> Result<LedgerOutcome, CliError> {
    let g = &inst.graph;
    match has_two_factor(g, opts.guard)? {
        TwoFactorDecision::Factor(f) => {
            let cycles = f.cycles(g.vertex_count());
            Ok(LedgerOutcome::TwoFactorExists { two_factor: f, cycles })
        }
        TwoFactorDecision::Barrier(_) => Ok(LedgerOutcome::Ledger(Box::new(analyze(
            g,
            inst.embedding.as_ref(),
            opts.guard,
        )?))),
    }
}

/// Aligned plain-text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = width[i]))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec(), &mut out);
    line(width.iter().map(|&w| &"----------------------------------------"[..w.min(40)]).collect(), &mut out);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

fn yn(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn opt(b: Option<bool>) -> String {
    b.map_or_else(|| "-".to_string(), yn)
}

pub fn validation_table(r: &ValidationReport) -> String {
    let rows: Vec<Vec<String>> = r
        .records
        .iter()
        .map(|x| {
            vec![
                x.id.clone(),
                x.n.to_string(),
                x.e.to_string(),
                x.toughness.clone(),
                yn(x.dist_condition),
                yn(x.two_factor),
                opt(x.hamiltonian),
                yn(x.hypotheses),
                x.ledger.as_ref().map_or("-".into(), |l| format!("q={} m={} p={} s*={}", l.q, l.m, l.p, l.s_star)),
            ]
        })
        .collect();
    let mut out = table(
        &["id", "n", "e", "tau", "dist", "2-factor", "hamiltonian", "hypotheses", "ledger"],
        &rows,
    );
    let a = &r.aggregate;
    let _ = writeln!(
        out,
        "\n{} instances, {} with a 2-factor, {} without; {} satisfy the hypotheses ({} of them with a 2-factor)",
        a.instances, a.two_factor, a.no_two_factor, a.hypotheses_satisfied, a.hypotheses_with_two_factor
    );
    let _ = writeln!(
        out,
        "tau >= 3/2: {}, dist-condition: {}, hamiltonian: {}/{}",
        a.tough_three_halves, a.dist_condition, a.hamiltonian, a.hamiltonian_checked
    );
    let _ = writeln!(
        out,
        "ledgers: {} (failures {}), c3 bound pass {}/{}, cutset bound pass {}/{}",
        a.ledgers, a.ledger_failures, a.c3_bound_pass, a.ledgers, a.cutset_bound_pass, a.ledgers
    );
    let _ = writeln!(out, "counterexamples: {}", a.counterexamples);
    out
}

pub fn ledger_table(outcome: &LedgerOutcome) -> String {
    match outcome {
        LedgerOutcome::TwoFactorExists { cycles, .. } => {
            let cyc: Vec<String> = cycles
                .iter()
                .map(|c| format!("({})", c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")))
                .collect();
            format!("no barrier: 2-factor exists\ncycles: {}\n", cyc.join(" "))
        }
        LedgerOutcome::Ledger(l) => {
            let s = LedgerSummary::of(l);
            let c3 = &l.c3;
            let rows = vec![
                vec!["S".into(), format!("{:?}", l.barrier.s)],
                vec!["T".into(), format!("{:?}", l.barrier.t)],
                vec!["delta".into(), l.barrier.delta.to_string()],
                vec!["biased properties".into(), yn(s.biased_properties)],
                vec!["c3".into(), s.c3.to_string()],
                vec!["H vertices / edges".into(), format!("{} / {}", l.h.h.vertex_count(), l.h.h.edge_count())],
                vec!["H invariants".into(), yn(s.h_invariants)],
                vec!["X".into(), format!("{:?}", l.stage_one.x)],
                vec!["q".into(), s.q.to_string()],
                vec!["s*".into(), s.s_star.to_string()],
                vec!["df(H)".into(), s.df.to_string()],
                vec!["deficiency bound".into(), yn(s.deficiency_bound)],
                vec!["M* properties".into(), yn(s.m_star_properties)],
                vec!["m".into(), s.m.to_string()],
                vec!["p".into(), s.p.to_string()],
                vec!["c3 bound".into(), format!("{} <= {}: {}", c3.lhs, c3.rhs, yn(c3.holds))],
                vec!["S'".into(), format!("{:?}", l.cutset.s_prime)],
                vec![
                    "c(G - S')".into(),
                    format!("{} >= {}: {}", l.cutset.component_count, l.cutset.lower_bound, yn(s.cutset_lower_bound)),
                ],
                vec!["|S'| / c".into(), s.cutset_ratio.clone().unwrap_or_else(|| "-".into())],
                vec!["auxiliary walks".into(), opt(s.walks_hold)],
            ];
            table(&["quantity", "value"], &rows)
        }
    }
}

/// Overlays for DOT export.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DotOverlays {
    /// Colour `S` and `T` of the biased barrier and cluster its components.
    pub barrier: bool,
    /// Draw the edges of a 2-factor in bold.
    pub two_factor: bool,
}

pub fn cmd_export_dot(inst: &Instance, overlays: DotOverlays, opts: Options) -> Result<String, CliError> {
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut role: Vec<Option<&str>> = vec![None; n];
    let mut clusters: Vec<(usize, Vec<usize>)> = Vec::new();
    if overlays.barrier && !has_two_factor(g, opts.guard)?.has_factor() {
        let b = biased_barrier(g, opts.guard)?;
        let cls = classify_components(g, &b.s, &b.t)?;
        for &v in &b.s {
            role[v] = Some("S");
        }
        for &v in &b.t {
            role[v] = Some("T");
        }
        clusters = cls.components.iter().map(|c| (c.t_edges, c.vertices.clone())).collect();
    }
    let bold: Vec<(usize, usize)> = if overlays.two_factor {
        match extract_two_factor(g) {
            Ok(f) => f.edges,
            Err(tutte_toughness::Error::Violation(_)) => Vec::new(),
            Err(e) => return Err(e.into()),
        }
    } else {
        Vec::new()
    };

    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    let node = |v: usize, indent: &str, out: &mut String| {
        let _ = match role[v] {
            Some("S") => writeln!(out, "{indent}{v} [label=\"{v}\\nS\", style=filled, fillcolor=\"#f4a6a6\"];"),
            Some(_) => writeln!(out, "{indent}{v} [label=\"{v}\\nT\", style=filled, fillcolor=\"#a6c8f4\"];"),
            None => writeln!(out, "{indent}{v};"),
        };
    };
    let mut clustered = vec![false; n];
    for (i, (t_edges, vs)) in clusters.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{i} {{\n    label=\"C{t_edges}\";");
        for &v in vs {
            node(v, "    ", &mut out);
            clustered[v] = true;
        }
        out.push_str("  }\n");
    }
    for v in (0..n).filter(|&v| !clustered[v]) {
        node(v, "  ", &mut out);
    }
    for (u, v) in g.edges() {
        if bold.contains(&(u, v)) || bold.contains(&(v, u)) {
            let _ = writeln!(out, "  {u} -- {v} [style=bold, penwidth=3];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Everything `info` reports about one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceInfo {
    pub n: usize,
    pub e: usize,
    pub connected: bool,
    pub toughness: ToughnessResult,
    pub dist_condition: bool,
    pub two_factor: TwoFactorDecision,
    pub hamiltonian: Option<Vec<usize>>,
    pub plane_triangulation: Option<bool>,
    pub graph6: String,
}

pub fn cmd_info(inst: &Instance, opts: Options) -> Result<InstanceInfo, CliError> {
    let g = &inst.graph;
    let plane_triangulation = match &inst.embedding {
        Some(e) => Some(e.is_plane_triangulation(g)?),
        None => None,
    };
    Ok(InstanceInfo {
        n: g.vertex_count(),
        e: g.edge_count(),
        connected: g.is_connected(),
        toughness: toughness(g)?,
        dist_condition: g.dist_condition().holds,
        two_factor: has_two_factor(g, opts.guard)?,
        hamiltonian: is_hamiltonian(g, opts.guard)?,
        plane_triangulation,
        graph6: write_graph6(g),
    })
}

pub fn info_table(info: &InstanceInfo) -> String {
    let tf = match &info.two_factor {
        TwoFactorDecision::Factor(f) => format!("yes ({} cycles)", f.cycles(info.n).len()),
        TwoFactorDecision::Barrier(b) => format!("no, barrier S={:?} T={:?} delta={}", b.s, b.t, b.delta),
    };
    let rows = vec![
        vec!["n".into(), info.n.to_string()],
        vec!["e".into(), info.e.to_string()],
        vec!["connected".into(), yn(info.connected)],
        vec!["toughness".into(), info.toughness.value.to_string()],
        vec!["toughness witness".into(), format!("{:?}", info.toughness.witness)],
        vec!["dist-condition".into(), yn(info.dist_condition)],
        vec!["2-factor".into(), tf],
        vec!["hamiltonian".into(), yn(info.hamiltonian.is_some())],
        vec!["plane triangulation".into(), opt(info.plane_triangulation)],
        vec!["graph6".into(), info.graph6.clone()],
    ];
    table(&["property", "value"], &rows)
}

/// Corpus manifest: one generated entry with its metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifestEntry {
    pub id: String,
    pub generator: Option<GeneratorSpec>,
    pub n: usize,
    pub e: usize,
    pub toughness: String,
    pub dist_condition: bool,
    pub two_factor: bool,
    pub hamiltonian: Option<bool>,
    pub graph6: String,
    pub instance: String,
}

pub fn manifest(entries: &[CorpusEntry]) -> Vec<ManifestEntry> {
    entries
        .iter()
        .map(|e| ManifestEntry {
            id: e.id.clone(),
            generator: e.generator,
            n: e.meta.n,
            e: e.meta.e,
            toughness: e.meta.toughness.to_string(),
            dist_condition: e.meta.dist_condition,
            two_factor: e.meta.two_factor,
            hamiltonian: e.meta.hamiltonian,
            graph6: write_graph6(&e.graph),
            instance: write_instance(&Instance::new(e.graph.clone()).with_embedding(e.embedding.clone())),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_instance;
    use tutte_toughness::embedding::named;
    use tutte_toughness::generators::stellate;

    fn item(id: &str, (graph, emb): (Graph, PlanarEmbedding)) -> CorpusItem {
        CorpusItem {
            id: id.into(),
            graph,
            embedding: Some(emb),
            generator: None,
        }
    }

    fn stellated_octahedron() -> (Graph, PlanarEmbedding) {
        let (g, e) = named::octahedron();
        stellate(&g, &e, &(0..8).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn icosahedron_validates() {
        let r = validate(vec![item("ico", named::icosahedron())], Options::default()).unwrap();
        assert_eq!(r.aggregate.instances, 1);
        assert_eq!(r.aggregate.hypotheses_satisfied, 1);
        assert!(r.records[0].two_factor);
        assert_eq!(r.records[0].hamiltonian, Some(true));
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn stellated_octahedron_is_outside_hypotheses() {
        let r = validate(vec![item("so", stellated_octahedron())], Options::default()).unwrap();
        assert_eq!(r.aggregate.hypotheses_satisfied, 0);
        assert!(r.counterexamples.is_empty());
        let rec = &r.records[0];
        assert!(!rec.two_factor);
        assert!(rec.ledger.is_some(), "{:?}", rec.ledger_error);
    }

    #[test]
    fn empty_corpus() {
        let r = validate(Vec::new(), Options::default()).unwrap();
        assert!(r.records.is_empty() && r.counterexamples.is_empty());
        assert_eq!(r.aggregate.instances, 0);
    }

    #[test]
    fn ledger_of_star_and_cycle() {
        let star = Instance::new(Graph::complete_bipartite(1, 3));
        match cmd_ledger(&star, Options::default()).unwrap() {
            LedgerOutcome::Ledger(l) => {
                assert!(l.barrier.s.is_empty());
                assert_eq!(l.barrier.t, vec![0]);
                assert_eq!(l.h.h.vertex_count(), 0);
                assert!(l.c3.holds);
            }
            other => panic!("{other:?}"),
        }
        let c5 = Instance::new(Graph::cycle(5));
        match cmd_ledger(&c5, Options::default()).unwrap() {
            LedgerOutcome::TwoFactorExists { cycles, .. } => assert_eq!(cycles.len(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dot_exports() {
        let tri = parse_instance("0 1\n1 2\n2 0").unwrap();
        let dot = cmd_export_dot(&tri, DotOverlays::default(), Options::default()).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 3);
        let nodes = dot.lines().filter(|l| l.trim().trim_end_matches(';').parse::<usize>().is_ok());
        assert_eq!(nodes.count(), 3);

        let star = Instance::new(Graph::complete_bipartite(1, 3));
        let dot = cmd_export_dot(&star, DotOverlays { barrier: true, two_factor: false }, Options::default()).unwrap();
        assert!(dot.contains("0 [label=\"0\\nT\""));
        assert_eq!(dot.matches("label=\"C1\"").count(), 3);

        let (oct, emb) = named::octahedron();
        let inst = Instance::new(oct).with_embedding(emb);
        let dot = cmd_export_dot(&inst, DotOverlays { barrier: true, two_factor: true }, Options::default()).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert_eq!(dot.matches("style=bold").count(), 6);
    }

    #[test]
    fn default_corpus_is_deterministic() {
        let a = default_corpus(12, 7, 14, 5).unwrap();
        let b = default_corpus(12, 7, 14, 5).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
            let n = x.graph.vertex_count();
            assert!((7..=14).contains(&n));
            assert_eq!(x.graph.edge_count(), 3 * n - 6);
        }
    }

    #[test]
    fn tables_align() {
        let t = table(&["a", "bbb"], &[vec!["xx".into(), "y".into()]]);
        assert_eq!(t, "a   bbb\n--  ---\nxx  y\n");
    }
}
