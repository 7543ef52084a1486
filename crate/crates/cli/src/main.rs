use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use matroid_tutte::constellation::{
    classify_elementary, extend_by_cut, find_tutte_path, tutte_graph, Constellation, ModularCut, TuttePath,
};
use matroid_tutte::foundation::{
    check_r_relations, count_representations, foundation, FoundationOptions, FoundationReport,
};
use matroid_tutte::homology::{search_l3, sigma_complex};
use matroid_tutte::matroid::format::{matroid_to_text, parse_flat_list, parse_matroid};
use matroid_tutte::pasture::{self, hom_count, hom_enumerate, recognize, PasturePresentation};
use matroid_tutte::{catalog, ElementSet, Matroid};

/// Lattices of flats, Tutte constellations, order-complex homology and
/// matroid foundations.
#[derive(Parser, Debug)]
#[command(name = "matroid-tutte", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Source {
    /// Catalog name (e.g. U2,4, F7*, MK4) or a matroid file
    matroid: String,

    /// Read MATROID as a file even if it is also a catalog name
    #[arg(long)]
    file: bool,

    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ConstellationArgs {
    /// Modular cut: `trivial`, `principal:<flat>` or a flat-list file
    #[arg(long, default_value = "trivial")]
    cut: String,

    /// Flat-list file of marked corank-2 flats
    #[arg(long)]
    marks: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the flats by rank
    Flats {
        #[command(flatten)]
        src: Source,
    },
    /// Hyperplanes off the cut and their admissible adjacencies
    TutteGraph {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        tau: ConstellationArgs,
    },
    /// A shortest Tutte path on a flat between two hyperplanes
    TuttePath {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        tau: ConstellationArgs,
        /// Indecomposable proper flat carrying the path
        #[arg(long, default_value = "-")]
        on: String,
        /// Starting hyperplane
        #[arg(long)]
        from: String,
        /// Final hyperplane
        #[arg(long)]
        to: String,
    },
    /// Match a closed Tutte path against the elementary templates
    ClassifyPath {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        tau: ConstellationArgs,
        /// Hyperplanes separated by `;`, first and last equal
        #[arg(long)]
        path: String,
    },
    /// The single-element extension given by a modular cut
    Extend {
        #[command(flatten)]
        src: Source,
        /// Modular cut: `trivial`, `principal:<flat>` or a flat-list file
        #[arg(long)]
        cut: String,
    },
    /// Homology groups of a level complex
    Homology {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        tau: ConstellationArgs,
        /// Level of the complex
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
        sigma: u8,
    },
    /// Vertices and faces of a level complex
    Sigma {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        tau: ConstellationArgs,
        /// Level of the complex
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
        sigma: u8,
    },
    /// Search marked constellations for classes the list must gain
    SearchL3 {
        /// Largest number of atoms to search
        #[arg(long, default_value_t = 4)]
        atoms: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Full foundation report
    Foundation {
        #[command(flatten)]
        src: Source,
        /// Generate every ordering and element choice of each relation
        #[arg(long)]
        paranoid: bool,
    },
    /// Universal cross-ratios of the non-degenerate tuples
    CrossRatios {
        #[command(flatten)]
        src: Source,
    },
    /// Evaluate every relation family on the foundation
    CheckRelations {
        #[command(flatten)]
        src: Source,
    },
    /// Count representations by morphisms and by brute force
    CountReps {
        #[command(flatten)]
        src: Source,
        /// Order of a finite field
        #[arg(long, conflicts_with = "target", required_unless_present = "target")]
        field: Option<usize>,
        /// Named target pasture
        #[arg(long)]
        target: Option<String>,
    },
    /// Classification flags read off the foundation
    Classify {
        #[command(flatten)]
        src: Source,
    },
    /// Morphisms between pastures
    PastureHom {
        /// Pasture name (U, D, H, F3, ...) or a presentation file
        pasture: String,
        /// Named target pasture or a presentation file
        #[arg(long)]
        target: String,
        /// Read PASTURE as a file even if it is also a name
        #[arg(long)]
        file: bool,
        /// Also list every morphism
        #[arg(long)]
        list: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Domain(matroid_tutte::Error),
}

impl From<matroid_tutte::Error> for Failure {
    fn from(e: matroid_tutte::Error) -> Self {
        Failure::Domain(e)
    }
}

type Run<T> = Result<T, Failure>;

fn read(path: &Path) -> Run<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_matroid(src: &Source) -> Run<Matroid> {
    if !src.file {
        match catalog::by_name(&src.matroid) {
            Ok(m) => return Ok(m),
            Err(matroid_tutte::Error::UnknownName(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let path = Path::new(&src.matroid);
    if !src.file && !path.exists() {
        return Err(Failure::Io(format!("`{}` is neither a catalog name nor a file", src.matroid)));
    }
    Ok(parse_matroid(&read(path)?)?)
}

fn load_pasture(name: &str, force_file: bool) -> Run<PasturePresentation> {
    if !force_file {
        match pasture::by_name(name) {
            Ok(p) => return Ok(p),
            Err(matroid_tutte::Error::UnknownName(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let path = Path::new(name);
    if !force_file && !path.exists() {
        return Err(Failure::Io(format!("`{name}` is neither a pasture name nor a file")));
    }
    Ok(PasturePresentation::parse(&read(path)?)?.with_label(name))
}

/// A flat written as `0,1`, `{0,1}`, `0 1`, `E` or `-`.
fn parse_set(text: &str, n: usize) -> Run<ElementSet> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    match t {
        "E" => return Ok(ElementSet::full(n)),
        "" | "-" | "∅" => return Ok(ElementSet::EMPTY),
        _ => {}
    }
    let mut s = ElementSet::EMPTY;
    for tok in t.split([',', ' ']).filter(|x| !x.is_empty()) {
        let e: usize = tok.parse().map_err(|_| Failure::Usage(format!("bad element `{tok}` in `{text}`")))?;
        if e >= n {
            return Err(matroid_tutte::Error::ElementOutOfRange { element: e, n }.into());
        }
        s.insert(e);
    }
    Ok(s)
}

fn parse_cut(m: &Matroid, spec: &str) -> Run<ModularCut> {
    if spec == "trivial" {
        return Ok(ModularCut::trivial(m));
    }
    if let Some(f) = spec.strip_prefix("principal:") {
        return Ok(ModularCut::principal(m, parse_set(f, m.n())?)?);
    }
    // A cut file may list only its minimal flats; the rest is filled in upward.
    let listed = parse_flat_list(&read(Path::new(spec))?, m.n())?;
    let lm = m.lattice();
    let mut flats: Vec<ElementSet> = Vec::new();
    for f in listed {
        if !lm.contains(f) {
            return Err(matroid_tutte::Error::NotAFlat(f).into());
        }
        flats.extend(lm.flats_above(f));
    }
    Ok(ModularCut::validate(m, flats)?)
}

fn load_constellation(src: &Source, args: &ConstellationArgs) -> Run<Constellation> {
    let m = load_matroid(src)?;
    let cut = parse_cut(&m, &args.cut)?;
    let marks = match &args.marks {
        Some(p) => parse_flat_list(&read(p)?, m.n())?,
        None => Vec::new(),
    };
    Ok(Constellation::new(m, cut, marks)?)
}

fn set_json(s: ElementSet) -> Value {
    json!(s.to_vec())
}

fn sets_json(v: &[ElementSet]) -> Value {
    Value::Array(v.iter().map(|s| set_json(*s)).collect())
}

fn emit(json_mode: bool, value: Value, text: String) -> Run<String> {
    if json_mode {
        let mut s = serde_json::to_string_pretty(&value).map_err(|e| Failure::Io(e.to_string()))?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(text)
    }
}

fn cmd_flats(src: &Source) -> Run<String> {
    let m = load_matroid(src)?;
    let lm = m.lattice();
    let mut text = format!("{}: n = {}, rank = {}, {} flats\n", m.display_name(), m.n(), m.rank(), lm.len());
    let mut by_rank = Vec::new();
    for k in 0..=m.rank() {
        let fs = lm.flats_of_rank(k);
        let labels: Vec<String> = fs.iter().map(|f| f.label()).collect();
        let _ = writeln!(text, "rank {k}: {}", labels.join(" "));
        by_rank.push(sets_json(&fs));
    }
    let value = json!({"matroid": m.display_name(), "n": m.n(), "rank": m.rank(), "flats_by_rank": by_rank});
    emit(src.json, value, text)
}

fn cmd_tutte_graph(src: &Source, args: &ConstellationArgs) -> Run<String> {
    let tau = load_constellation(src, args)?;
    let g = tutte_graph(&tau);
    let comps = g.components();
    let mut text = format!("vertices: {}\n", g.vertices.len());
    for (i, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(text, "  {i}: {}", v.label());
    }
    let _ = writeln!(text, "edges: {}", g.edges.len());
    for (i, j, l) in &g.edges {
        let _ = writeln!(text, "  {i} -- {j} via {}", l.label());
    }
    let _ = writeln!(text, "components: {}", comps.len());
    let _ = writeln!(text, "connected: {}", g.is_connected());
    let edges: Vec<Value> = g.edges.iter().map(|(i, j, l)| json!({"from": i, "to": j, "flat": set_json(*l)})).collect();
    let value = json!({
        "vertices": sets_json(&g.vertices),
        "edges": edges,
        "components": comps,
        "connected": g.is_connected(),
    });
    emit(src.json, value, text)
}

fn cmd_tutte_path(src: &Source, args: &ConstellationArgs, on: &str, from: &str, to: &str) -> Run<String> {
    let tau = load_constellation(src, args)?;
    let n = tau.matroid().n();
    let path = find_tutte_path(&tau, parse_set(on, n)?, parse_set(from, n)?, parse_set(to, n)?)?;
    let labels: Vec<String> = path.terms.iter().map(|h| h.label()).collect();
    let text = format!("length {}: {}\n", path.terms.len() - 1, labels.join(" -> "));
    emit(src.json, json!({"terms": sets_json(&path.terms)}), text)
}

fn cmd_classify_path(src: &Source, args: &ConstellationArgs, path: &str) -> Run<String> {
    let tau = load_constellation(src, args)?;
    let n = tau.matroid().n();
    let terms = path.split(';').map(|t| parse_set(t, n)).collect::<Run<Vec<_>>>()?;
    match classify_elementary(&tau, &TuttePath::new(terms))? {
        None => emit(src.json, json!({"elementary": false}), "not elementary\n".to_string()),
        Some(c) => {
            let covers: Vec<String> = c.covers.iter().map(|f| f.label()).collect();
            let types: Vec<String> = c.matching_types.iter().map(|t| t.to_string()).collect();
            let text = format!(
                "kind {}, type {} ({})\nbottom: {}\ncovers: {}\nmatching types: {}\n",
                c.kind,
                c.ty,
                c.extended_type,
                c.bottom.label(),
                covers.join(" "),
                types.join(" ")
            );
            let value = json!({
                "elementary": true,
                "kind": c.kind,
                "type": c.ty,
                "extended_type": c.extended_type,
                "bottom": set_json(c.bottom),
                "covers": sets_json(&c.covers),
                "matching_types": c.matching_types,
            });
            emit(src.json, value, text)
        }
    }
}

fn cmd_extend(src: &Source, cut: &str) -> Run<String> {
    let m = load_matroid(src)?;
    let cut = parse_cut(&m, cut)?;
    let ext = extend_by_cut(&m, &cut)?;
    let bases: Vec<Value> = ext.bases().iter().map(|b| set_json(*b)).collect();
    let value = json!({"n": ext.n(), "rank": ext.rank(), "bases": bases});
    emit(src.json, value, matroid_to_text(&ext))
}

fn cmd_homology(src: &Source, args: &ConstellationArgs, level: u8) -> Run<String> {
    let tau = load_constellation(src, args)?;
    let sc = sigma_complex(&tau, level);
    let top = sc.complex.dim().max(1) as usize;
    let groups: Vec<_> = (0..=top).map(|k| sc.complex.homology_or_zero(k)).collect();
    let mut text = String::new();
    for (k, h) in groups.iter().enumerate() {
        let _ = writeln!(text, "H{k} = {h}");
    }
    let hs: Vec<Value> = groups
        .iter()
        .enumerate()
        .map(|(k, h)| {
            let torsion: Vec<String> = h.torsion.iter().map(|d| d.to_string()).collect();
            json!({"degree": k, "group": h.to_string(), "rank": h.rank, "torsion": torsion})
        })
        .collect();
    let value = json!({"sigma": level, "f_vector": sc.complex.f_vector(), "homology": hs});
    emit(src.json, value, text)
}

fn cmd_sigma(src: &Source, args: &ConstellationArgs, level: u8) -> Run<String> {
    let tau = load_constellation(src, args)?;
    let sc = sigma_complex(&tau, level);
    let fv: Vec<String> = sc.complex.f_vector().iter().map(|x| x.to_string()).collect();
    let mut text = format!("f-vector: ({})\n[vertices]\n", fv.join(", "));
    for (class, sub) in &sc.vertices {
        let flats: Vec<String> = sub.flats().iter().map(|f| f.label()).collect();
        let _ = writeln!(text, "{} {}: {}", class.name(), sub.label(), flats.join(" "));
    }
    text.push_str("[faces]\n");
    text.push_str(&sc.complex.dump());
    let vertices: Vec<Value> = sc
        .vertices
        .iter()
        .map(|(c, s)| json!({"class": c.name(), "label": s.label(), "flats": sets_json(&s.flats())}))
        .collect();
    let faces: Vec<Value> = (0..sc.complex.f_vector().len()).map(|k| json!(sc.complex.faces(k))).collect();
    let value = json!({"sigma": level, "f_vector": sc.complex.f_vector(), "vertices": vertices, "faces": faces});
    emit(src.json, value, text)
}

fn cmd_search_l3(atoms: usize, json_mode: bool) -> Run<String> {
    let result = search_l3(atoms)?;
    let mut text = String::new();
    let line = |s: &matroid_tutte::homology::L3Summary| {
        let cut: Vec<String> = s.cut.iter().map(|f| f.label()).collect();
        let marks: Vec<String> = s.marks.iter().map(|f| f.label()).collect();
        let h = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
        format!(
            "{:<6} {} atoms  {:<8} cut [{}] marks [{}]  H1 = {}  H2 = {}\n",
            s.id,
            s.atoms,
            s.lattice_type,
            cut.join(" "),
            marks.join(" "),
            h(&s.h1),
            h(&s.h2)
        )
    };
    let classes: Vec<_> = result.classes.iter().map(|c| c.summary()).collect();
    let side: Vec<_> = result.first_homology_only.iter().map(|c| c.summary()).collect();
    text.push_str("[classes]\n");
    classes.iter().for_each(|s| text.push_str(&line(s)));
    text.push_str("[first homology only]\n");
    side.iter().for_each(|s| text.push_str(&line(s)));
    let value = json!({"max_atoms": atoms, "classes": classes, "first_homology_only": side});
    emit(json_mode, value, text)
}

fn report_json(f: &FoundationReport) -> Value {
    let hs = f.hyperplanes();
    let p = &f.presentation;
    let crs: Vec<Value> = f
        .cross_ratios
        .iter()
        .filter(|(t, _)| t.nondegenerate)
        .map(|(t, v)| json!({"tuple": t.index.label(hs), "value": p.format_element(v)}))
        .collect();
    json!({
        "hyperplanes": sets_json(hs),
        "presentation": p.to_text(),
        "unit_group": p.group().to_string(),
        "generators": f.generators.iter().map(|g| g.label(hs)).collect::<Vec<_>>(),
        "cross_ratios": crs,
        "structure": f.structure.to_string(),
        "flags": f.flags,
    })
}

fn cmd_foundation(src: &Source, paranoid: bool) -> Run<String> {
    let m = load_matroid(src)?;
    let f = FoundationReport::build(&m, &FoundationOptions { paranoid, classify: true, ..Default::default() })?;
    emit(src.json, report_json(&f), f.to_text())
}

fn cmd_cross_ratios(src: &Source) -> Run<String> {
    let m = load_matroid(src)?;
    let f = foundation(&m)?;
    let hs = f.hyperplanes();
    let mut text = String::new();
    let mut rows = Vec::new();
    for (t, v) in f.cross_ratios.iter().filter(|(t, _)| t.nondegenerate) {
        let value = f.presentation.format_element(v);
        let _ = writeln!(text, "{} on {} = {value}", t.index.label(hs), t.flat.label());
        rows.push(json!({"tuple": t.index.label(hs), "flat": set_json(t.flat), "value": value}));
    }
    emit(src.json, json!({"cross_ratios": rows}), text)
}

fn cmd_check_relations(src: &Source) -> Run<String> {
    let m = load_matroid(src)?;
    let report = check_r_relations(&m)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (kind, pass, total) in report.summary() {
        let _ = writeln!(text, "{kind:<13} {pass}/{total}");
        rows.push(json!({"kind": kind, "passed": pass, "total": total}));
    }
    let failed: Vec<String> = report.checks.iter().filter(|c| !c.pass).map(|c| format!("{} {}", c.kind, c.instance)).collect();
    if !failed.is_empty() {
        return Err(matroid_tutte::Error::Inconsistent(format!("relations fail: {}", failed.join("; "))).into());
    }
    text.push_str("all relations hold\n");
    emit(src.json, json!({"summary": rows, "all_pass": true}), text)
}

fn cmd_count_reps(src: &Source, field: Option<usize>, target: Option<&str>) -> Run<String> {
    let m = load_matroid(src)?;
    let p = match (field, target) {
        (Some(q), _) => pasture::finite_field(q)?,
        (None, Some(t)) => load_pasture(t, false)?,
        (None, None) => return Err(Failure::Usage("count-reps needs --field or --target".into())),
    };
    let name = p.label().unwrap_or("target").to_string();
    let c = count_representations(&m, &p)?;
    let text = format!("{}\nhom: {}\nbrute force: {}\n", c.hom, c.hom, c.brute_force);
    let value = json!({"matroid": m.display_name(), "target": name, "count": c.hom, "hom": c.hom, "brute_force": c.brute_force});
    emit(src.json, value, text)
}

fn cmd_classify(src: &Source) -> Run<String> {
    let m = load_matroid(src)?;
    let f = foundation(&m)?;
    let flags = f.flags.clone().expect("classification requested");
    let mut text = format!("foundation: {}\n", f.structure);
    let opt = |b: Option<bool>| b.map_or("undecided".to_string(), |x| x.to_string());
    for (k, v) in [
        ("regular", flags.regular.to_string()),
        ("binary", flags.binary.to_string()),
        ("ternary", flags.ternary.to_string()),
        ("wlum", flags.wlum.to_string()),
        ("orientable", flags.orientable.to_string()),
        ("dyadic", opt(flags.dyadic)),
        ("dressian", flags.dressian.map_or("undecided".to_string(), |(a, b)| format!("m = {a}, p = {b}"))),
    ] {
        let _ = writeln!(text, "{k}: {v}");
    }
    emit(src.json, json!({"structure": f.structure.to_string(), "flags": flags}), text)
}

fn cmd_pasture_hom(source: &str, target: &str, file: bool, list: bool, json_mode: bool) -> Run<String> {
    let s = load_pasture(source, file)?;
    let t = load_pasture(target, false)?;
    let n = hom_count(&s, &t)?;
    let mut text = format!("{n}\n");
    let mut maps = Vec::new();
    if list {
        for (i, f) in hom_enumerate(&s, &t)?.iter().enumerate() {
            let images: Vec<String> = f.images.iter().map(|x| format!("{x:?}")).collect();
            let _ = writeln!(text, "  {i}: {}", images.join(" "));
            maps.push(json!(f.images));
        }
    }
    let value = json!({
        "source": source,
        "source_structure": recognize(&s).to_string(),
        "target": target,
        "count": n,
        "morphisms": if list { Value::Array(maps) } else { Value::Null },
    });
    emit(json_mode, value, text)
}

fn run(cli: Cli) -> Run<String> {
    match &cli.verb {
        Verb::Flats { src } => cmd_flats(src),
        Verb::TutteGraph { src, tau } => cmd_tutte_graph(src, tau),
        Verb::TuttePath { src, tau, on, from, to } => cmd_tutte_path(src, tau, on, from, to),
        Verb::ClassifyPath { src, tau, path } => cmd_classify_path(src, tau, path),
        Verb::Extend { src, cut } => cmd_extend(src, cut),
        Verb::Homology { src, tau, sigma } => cmd_homology(src, tau, *sigma),
        Verb::Sigma { src, tau, sigma } => cmd_sigma(src, tau, *sigma),
        Verb::SearchL3 { atoms, json } => cmd_search_l3(*atoms, *json),
        Verb::Foundation { src, paranoid } => cmd_foundation(src, *paranoid),
        Verb::CrossRatios { src } => cmd_cross_ratios(src),
        Verb::CheckRelations { src } => cmd_check_relations(src),
        Verb::CountReps { src, field, target } => cmd_count_reps(src, *field, target.as_deref()),
        Verb::Classify { src } => cmd_classify(src),
        Verb::PastureHom { pasture, target, file, list, json } => cmd_pasture_hom(pasture, target, *file, *list, *json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error[usage]: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error[usage]: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error[io]: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error[domain]: {e}");
            ExitCode::from(1)
        }
    }
}
