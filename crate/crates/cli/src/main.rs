//! `linkage`: partial Cartan matrices, linkage systems and root-system
//! checks for simply-laced Carter diagrams.

mod render;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use carter_linkage::catalog::{self, catalog};
use carter_linkage::linkage::beta_unicolored;
use carter_linkage::orbit::{gamma8_candidates, project_system, LoctetSource};
use carter_linkage::roots::{
    check_projection_laws, direct_linkage_labels, embedding_independence, square_diagonal_audit,
    weight_orbit,
};
use carter_linkage::{
    build_system, enumerate_linkages, find_embedding, group_by_p, CarterDiagram, LinkageError,
    LinkageSystem, LoctetType, PartialCartan, RootSystem, VertexId,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Linkage diagrams of simply-laced Carter diagrams.
///
/// A DIAGRAM is a catalog name (`E6(a1)`, `E6a1`, `D9(a2)`, `A_5`, `D7`, ...)
/// or the path of a diagram JSON file.
#[derive(Parser, Debug)]
#[command(name = "linkage", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the named diagrams. `A_l`, `D_l` and `D_l(a_k)` are also
    /// accepted for any l up to 12.
    Catalog,
    /// Print the partial Cartan matrix.
    Cartan {
        diagram: String,
        /// Also print the inverse.
        #[arg(long)]
        inverse: bool,
        /// Print only the determinant.
        #[arg(long)]
        det: bool,
    },
    /// Enumerate linkage vectors.
    Linkages {
        diagram: String,
        /// Split into extension sets by the value of the inverse form.
        #[arg(long)]
        group_by_p: bool,
        /// Only the vectors vanishing on every alpha vertex.
        #[arg(long)]
        beta_unicolored: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the linkage system.
    System {
        diagram: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to FILE instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print γ(8) candidates and loctets by type.
    Loctets { diagram: String },
    /// Print the diagonal of the inverse matrix and whether a leaf may be
    /// attached at each vertex.
    Extendable { diagram: String },
    /// Project the linkage system of EXTENSION onto BASE by dropping a vertex.
    Project {
        extension: String,
        base: String,
        /// The vertex of EXTENSION missing from BASE, e.g. `b3` or `f2`.
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the enumeration against a root system.
    Verify {
        diagram: String,
        /// E6, E7, E8, D<n> or A<n>.
        #[arg(long, default_value = "E8")]
        ambient: String,
        /// Compare the label sets of this many embeddings.
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Orbit of a fundamental weight of a Dynkin diagram.
    Weights {
        diagram: String,
        #[arg(long)]
        vertex: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out, why)) => {
            print!("{out}");
            eprintln!("mismatch: {why}");
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, LinkageError::Verification(_)) {
                2
            } else {
                1
            })
        }
    }
}

enum Failure {
    /// Partial report and the first disagreement.
    Mismatch(String, String),
    Error(LinkageError),
}

impl From<LinkageError> for Failure {
    fn from(e: LinkageError) -> Self {
        Failure::Error(e)
    }
}

type Run = Result<String, Failure>;

fn load(src: &str) -> Result<CarterDiagram, LinkageError> {
    let path = Path::new(src);
    if path.is_file() {
        let text =
            fs::read_to_string(path).map_err(|e| LinkageError::Parse(format!("{src}: {e}")))?;
        let d = CarterDiagram::from_json(&text)?;
        d.ensure_valid()?;
        Ok(d)
    } else {
        catalog(src)
    }
}

fn vertex(d: &CarterDiagram, label: &str) -> Result<VertexId, LinkageError> {
    d.vertex_by_label(label)
        .ok_or_else(|| LinkageError::UnknownVertex(format!("{label} in {}", d.name())))
}

fn json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

fn run(cmd: Command) -> Run {
    match cmd {
        Command::Catalog => Ok(catalog::names().join("\n") + "\n"),
        Command::Cartan {
            diagram,
            inverse,
            det,
        } => cartan(&diagram, inverse, det),
        Command::Linkages {
            diagram,
            group_by_p,
            beta_unicolored,
            json,
        } => linkages(&diagram, group_by_p, beta_unicolored, json),
        Command::System {
            diagram,
            format,
            out,
        } => system(&diagram, format, out.as_deref()),
        Command::Loctets { diagram } => loctets(&diagram),
        Command::Extendable { diagram } => extendable(&diagram),
        Command::Project {
            extension,
            base,
            vertex,
            json,
        } => project(&extension, &base, &vertex, json),
        Command::Verify {
            diagram,
            ambient,
            trials,
        } => verify(&diagram, &ambient, trials),
        Command::Weights { diagram, vertex } => weights(&diagram, &vertex),
    }
}

fn header(d: &CarterDiagram) -> String {
    let labels: Vec<String> = d.vertices().iter().map(|v| v.label()).collect();
    format!("{}  [{}]\n", d.name(), labels.join(" "))
}

fn cartan(src: &str, inverse: bool, det: bool) -> Run {
    let pc = PartialCartan::new(&load(src)?)?;
    if det {
        return Ok(format!("{}\n", pc.det()));
    }
    let mut out = header(pc.diagram());
    out += &render::fraction_grid(pc.matrix());
    if inverse {
        out += "inverse\n";
        out += &render::fraction_grid(pc.inverse());
    }
    out += &format!("det {}\n", pc.det());
    Ok(out)
}

fn linkages(src: &str, by_p: bool, unicolored: bool, as_json: bool) -> Run {
    let pc = PartialCartan::new(&load(src)?)?;
    let all = enumerate_linkages(&pc);
    if unicolored {
        let bu = beta_unicolored(pc.diagram(), &all);
        if as_json {
            return Ok(json(&bu));
        }
        let mut out = header(pc.diagram());
        out += &format!("{} β-unicolored\n", bu.members.len());
        for v in &bu.members {
            out += &format!("{v}\n");
        }
        if let Some(b1) = &bu.b1 {
            let verdict = if bu.b1_zero {
                "zero on all"
            } else {
                "nonzero on some"
            };
            out += &format!("{b1}: {verdict}\n");
        }
        return Ok(out);
    }
    if by_p {
        let sets = group_by_p(&pc, &all);
        if as_json {
            return Ok(json(&sets));
        }
        let mut out = header(pc.diagram());
        for s in &sets {
            out += &format!("p = {}: {}\n", s.p, s.members.len());
            for v in &s.members {
                out += &format!("  {v}\n");
            }
        }
        return Ok(out);
    }
    if as_json {
        return Ok(json(&all));
    }
    let mut out = header(pc.diagram());
    out += &format!("{} linkages\n", all.len());
    for v in &all {
        out += &format!("{v}  p = {}\n", pc.inverse_form(v.entries()));
    }
    Ok(out)
}

fn summary(s: &LinkageSystem) -> String {
    let mut out = header(&s.diagram);
    out += &format!(
        "{} linkages, {} components, {} loctets, {} outside loctets\n",
        s.nodes.len(),
        s.components.len(),
        s.loctets.len(),
        s.unicolored.len()
    );
    for (i, c) in s.components.iter().enumerate() {
        out += &format!("component {i}: {} nodes, p = {}\n", c.nodes.len(), c.p);
    }
    let source = match s.loctet_source {
        LoctetSource::Pattern(k) => format!("{k:?} pattern"),
        LoctetSource::Components => "components".to_string(),
        LoctetSource::None => "none".to_string(),
    };
    out += &format!("loctets from {source}\n");
    for (i, l) in s.loctets.iter().enumerate() {
        out += &format!("loctet {i} {:?}: γ(8) = {}\n", l.ty, l.gamma(8));
    }
    out
}

fn system(src: &str, format: Format, out: Option<&Path>) -> Run {
    let s = build_system(&PartialCartan::new(&load(src)?)?)?;
    let text = match format {
        Format::Text => summary(&s),
        Format::Json => s.to_json() + "\n",
        Format::Dot => s.to_dot(),
    };
    match out {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| LinkageError::Parse(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn loctets(src: &str) -> Run {
    let pc = PartialCartan::new(&load(src)?)?;
    let s = build_system(&pc)?;
    let mut out = header(pc.diagram());
    if matches!(s.loctet_source, LoctetSource::Pattern(_)) {
        for ty in LoctetType::ALL {
            let c = gamma8_candidates(&pc, ty)?;
            let list: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            out += &format!("{ty:?} γ(8) candidates: {}\n", list.join(" "));
        }
    } else {
        out += "no pattern; each component is one loctet\n";
    }
    for (i, l) in s.loctets.iter().enumerate() {
        out += &format!("loctet {i} {:?}\n", l.ty);
        for n in 1..=8 {
            out += &format!("  γ({n}) = {}\n", l.gamma(n));
        }
    }
    Ok(out)
}

fn extendable(src: &str) -> Run {
    let pc = PartialCartan::new(&load(src)?)?;
    let mut out = header(pc.diagram());
    for &v in pc.diagram().vertices() {
        let verdict = if pc.simply_extendable(v)? {
            "extendable"
        } else {
            "not extendable"
        };
        out += &format!(
            "{:<4} {:>6}  {verdict}\n",
            v.label(),
            pc.inverse_diagonal(v)?.to_string()
        );
    }
    Ok(out)
}

fn project(ext_src: &str, base_src: &str, label: &str, as_json: bool) -> Run {
    let ext = load(ext_src)?;
    let base = load(base_src)?;
    let dropped = vertex(&ext, label)?;
    let sys = build_system(&PartialCartan::new(&ext)?)?;
    let r = project_system(&sys, dropped, &PartialCartan::new(&base)?)?;
    if as_json {
        return Ok(json(&r));
    }
    let mut out = format!(
        "{} -> {} dropping {} (attached at {})\n",
        r.extension, r.base, r.dropped, r.at
    );
    out += &format!(
        "{} extension nodes, {} base nodes, {} images\n",
        r.ext_nodes, r.base_nodes, r.image_size
    );
    let kernel: Vec<String> = r.kernel.iter().map(|v| v.to_string()).collect();
    out += &format!("kernel ({}): {}\n", kernel.len(), kernel.join(" "));
    for m in &r.loctet_map {
        match (m.base, m.base_type) {
            (Some(b), Some(t)) => {
                out += &format!("loctet {} {:?} -> loctet {b} {t:?}\n", m.ext, m.ext_type)
            }
            _ => out += &format!("loctet {} {:?} -> no loctet\n", m.ext, m.ext_type),
        }
    }
    for (b, exts) in r.collapsing().iter().filter(|(_, e)| e.len() > 1) {
        let list: Vec<String> = exts.iter().map(|e| e.to_string()).collect();
        out += &format!("loctets {} -> loctet {b}\n", list.join(", "));
    }
    Ok(out)
}

fn verify(src: &str, ambient: &str, trials: usize) -> Run {
    let d = load(src)?;
    let pc = PartialCartan::new(&d)?;
    let amb = RootSystem::build(ambient)?;
    let enumerated = enumerate_linkages(&pc);
    let mut out = header(&d);
    out += &format!("{} linkages enumerated\n", enumerated.len());
    out += &format!("ambient {}: {} roots\n", amb.name(), amb.len());
    let Some(e) = find_embedding(&d, &amb) else {
        return Err(Failure::Mismatch(
            out,
            format!("{} does not embed in {}", d.name(), amb.name()),
        ));
    };
    let idx: Vec<String> = e.indices.iter().map(|i| i.to_string()).collect();
    out += &format!("embedding: roots {}\n", idx.join(" "));

    let dl = direct_linkage_labels(&e, &amb)?;
    out += &format!(
        "{} independent roots, {} distinct labels, {} orthogonal, {} in the span\n",
        dl.realized.len(),
        dl.distinct.len(),
        dl.orthogonal_roots,
        dl.dependent_roots
    );
    let known: BTreeSet<_> = enumerated.iter().collect();
    if let Some(v) = dl.distinct.iter().find(|v| !known.contains(v)) {
        return Err(Failure::Mismatch(
            out,
            format!("direct label {v} is not enumerated"),
        ));
    }
    if dl.distinct == enumerated {
        out += "labels: equal to the enumerated set\n";
    } else if amb.name() == "E8" {
        return Err(Failure::Mismatch(
            out,
            format!(
                "{} of {} enumerated linkages are realized in E8",
                dl.distinct.len(),
                enumerated.len()
            ),
        ));
    } else {
        out += &format!(
            "labels: {} of {} enumerated\n",
            dl.distinct.len(),
            enumerated.len()
        );
    }

    match check_projection_laws(&dl, &e, &amb) {
        Ok(laws) => {
            out += &format!(
                "projection laws: {} linkages, {} classes, {} mirrors are roots\n",
                laws.checked,
                laws.classes.len(),
                laws.mirror_roots
            );
            for c in &laws.classes {
                out += &format!(
                    "  p = {}, |μ|² = {}: {} linkages, subsystem of {} roots\n",
                    c.p, c.mu_norm_sq, c.linkages, c.subsystem_roots
                );
            }
        }
        Err(err) => return Err(Failure::Mismatch(out, err.to_string())),
    }
    match square_diagonal_audit(&dl, &e) {
        Ok(a) => {
            out += &format!(
                "square audit: {} configurations, no violations\n",
                a.configurations
            )
        }
        Err(err) => return Err(Failure::Mismatch(out, err.to_string())),
    }
    if trials > 1 {
        match embedding_independence(&d, &amb, trials) {
            Ok(r) => {
                out += &format!(
                    "{} embeddings give the same {} labels\n",
                    r.embeddings, r.label_set_size
                )
            }
            Err(err) => return Err(Failure::Mismatch(out, err.to_string())),
        }
    }
    Ok(out)
}

fn weights(src: &str, label: &str) -> Run {
    let pc = PartialCartan::new(&load(src)?)?;
    let v = vertex(pc.diagram(), label)?;
    let orbit = weight_orbit(&pc, v)?;
    let mut out = header(pc.diagram());
    out += &format!("orbit of ω({label}): {} weights\n", orbit.len());
    for w in &orbit {
        out += &format!("{w}\n");
    }
    Ok(out)
}
