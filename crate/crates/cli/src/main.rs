//! `pcarr`: build, transform and inspect pseudocircle arrangements.
//!
//! Pipes carry the `.arr` text format. `--out` picks the format from the file
//! extension. Exit codes: 0 ok, 1 domain error, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use pseudocircles::analysis::{
    agarwal_drawing, alternation_witnesses, claim1_check, graph_checks, pc_arc_types, report, touching_graph,
};
use pseudocircles::constructions::{self as cons, Side};
use pseudocircles::enumeration::{enumerate_orbits, summarize, Constraints, EnumOptions};
use pseudocircles::format::{parse_arr, parse_wir, write_arr, write_wir};
use pseudocircles::render::{render_svg, RenderOptions};
use pseudocircles::{Arrangement, Error, Wiring};

/// Overrides the directory holding `base6.wir`, `base7.wir` and `base8.wir`.
const DATA_ENV: &str = "PSEUDOCIRCLES_DATA";

#[derive(Parser)]
#[command(name = "pcarr", version, about = "Arrangements of pairwise intersecting pseudocircles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family.
    Build {
        family: Target,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the analysis report.
    Stats {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = StatsFormat::Kv)]
        format: StatsFormat,
    },
    /// Exit 0 iff the input is a valid arrangement or wiring.
    Validate { file: Option<PathBuf> },
    /// Contract a lens face to a touching.
    Contract {
        file: Option<PathBuf>,
        #[arg(long)]
        face: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relax a touching vertex into a lens.
    Relax {
        file: Option<PathBuf>,
        #[arg(long)]
        touch: usize,
        #[arg(long)]
        side: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blossom a circle with at least three touchings.
    Blossom {
        file: Option<PathBuf>,
        #[arg(long)]
        circle: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace a circle by four along an alternating triangle quadruple.
    Replace {
        file: Option<PathBuf>,
        #[arg(long)]
        circle: usize,
        /// Face ids of the four witness triangles, in walk order.
        #[arg(long, value_delimiter = ',')]
        witness: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the touching graph.
    TouchingGraph {
        file: Option<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',')]
        check: Vec<GraphCheck>,
    },
    /// Check pc-arc typing on a touching triple, or drawing-rule parities on a cut.
    Claims {
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', conflicts_with = "agarwal")]
        triple: Option<Vec<usize>>,
        #[arg(long, requires = "cut")]
        agarwal: bool,
        #[arg(long)]
        cut: Option<usize>,
    },
    /// Enumerate annular wirings up to symmetry.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        digon_free: bool,
        #[arg(long)]
        allow_touch: bool,
        /// Allow n = 5, which takes minutes.
        #[arg(long)]
        n5: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a wiring as SVG.
    Render {
        file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        shade_triangles: bool,
    },
    /// Convert between formats.
    Convert {
        file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Krupp,
    GrunbaumDigons,
    Wheel,
    Base,
    TriangleFamily,
    Prop1Family,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    Kv,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphCheck {
    Planar,
    Bipartite,
    Triangles,
}

/// What was read or built: arrangements always, wirings when available.
struct Input {
    wiring: Option<Wiring>,
    arrangement: Arrangement,
}

impl Input {
    fn from_wiring(w: Wiring) -> anyhow::Result<Input> {
        let arrangement = w.to_arrangement()?;
        Ok(Input { wiring: Some(w), arrangement })
    }

    fn from_arrangement(a: Arrangement) -> Input {
        Input { wiring: None, arrangement: a }
    }

    fn wiring(&self) -> Result<&Wiring, Error> {
        self.wiring.as_ref().ok_or_else(|| Error::NoWiring("this arrangement has no wiring diagram; .wir output, rendering and cuts need one".into()))
    }
}

fn read_text(file: Option<&Path>) -> anyhow::Result<String> {
    match file {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn is_wiring_text(file: Option<&Path>, text: &str) -> bool {
    match file.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("wir") => true,
        Some("arr") => false,
        _ => text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).is_some_and(|l| l.starts_with("wiring")),
    }
}

fn load(file: Option<&Path>) -> anyhow::Result<Input> {
    let text = read_text(file)?;
    if is_wiring_text(file, &text) {
        Input::from_wiring(parse_wir(&text)?)
    } else {
        let a = parse_arr(&text)?;
        a.ensure_valid()?;
        Ok(Input::from_arrangement(a))
    }
}

fn write_output(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes()).context("cannot write standard output")?;
            Ok(())
        }
    }
}

/// Writes `input` in the format named by the extension of `out`; `.arr` to stdout without one.
fn emit(input: &Input, out: Option<&Path>, shade: bool) -> anyhow::Result<()> {
    let ext = out.and_then(|p| p.extension()).and_then(|e| e.to_str()).unwrap_or("arr");
    let text = match ext {
        "arr" => write_arr(&input.arrangement),
        "wir" => write_wir(input.wiring()?),
        "svg" => render_svg(input.wiring()?, &RenderOptions { shade_cells: shade })?,
        other => bail!(Error::OutOfRange(format!("unknown output extension '.{other}', expected .arr, .wir or .svg"))),
    };
    write_output(out, &text)
}

fn need_n(family: &str, n: Option<usize>) -> Result<usize, Error> {
    n.ok_or_else(|| Error::OutOfRange(format!("{family} needs --n")))
}

fn base_wiring(m: usize) -> anyhow::Result<Wiring> {
    match std::env::var_os(DATA_ENV) {
        Some(dir) => {
            cons::base_resource(m)?;
            let path = Path::new(&dir).join(format!("base{m}.wir"));
            let text = fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
            Ok(parse_wir(&text)?)
        }
        None => Ok(cons::base_wiring(m)?),
    }
}

fn build(family: Target, n: Option<usize>) -> anyhow::Result<Input> {
    Ok(match family {
        Target::Krupp => Input::from_wiring(cons::krupp_wiring())?,
        Target::GrunbaumDigons => Input::from_wiring(cons::grunbaum_wiring(need_n("grunbaum-digons", n)?)?)?,
        Target::Base => Input::from_wiring(base_wiring(need_n("base", n)?)?)?,
        Target::Wheel => Input::from_arrangement(cons::wheel(need_n("wheel", n)?)?),
        Target::TriangleFamily => Input::from_arrangement(cons::triangle_family(need_n("triangle-family", n)?)?),
        Target::Prop1Family => Input::from_arrangement(cons::prop1_family(need_n("prop1-family", n)?)?),
    })
}

fn touching_graph_text(a: &Arrangement, checks: &[GraphCheck]) -> String {
    let g = touching_graph(a);
    let mut s = String::new();
    writeln!(s, "vertices={}", g.n).unwrap();
    writeln!(s, "edges={}", g.edges.len()).unwrap();
    for (u, v) in &g.edges {
        writeln!(s, "edge={u},{v}").unwrap();
    }
    for (c, order) in g.order.iter().enumerate() {
        let list: Vec<String> = order.iter().map(|x| x.to_string()).collect();
        writeln!(s, "order.{c}={}", list.join(",")).unwrap();
    }
    if !checks.is_empty() {
        let r = graph_checks(&g);
        for check in checks {
            match check {
                GraphCheck::Planar => writeln!(s, "planar={}", r.planar).unwrap(),
                GraphCheck::Bipartite => writeln!(s, "bipartite={}", r.bipartite).unwrap(),
                GraphCheck::Triangles => {
                    let list: Vec<String> = r.triangles.iter().map(|t| format!("{},{},{}", t[0], t[1], t[2])).collect();
                    writeln!(s, "triangles={}", r.triangles.len()).unwrap();
                    writeln!(s, "triangle_list={}", list.join(";")).unwrap();
                }
            }
        }
    }
    s
}

fn claim1_text(a: &Arrangement, triple: [usize; 3]) -> anyhow::Result<String> {
    let arcs = pc_arc_types(a, triple)?;
    let r = claim1_check(a, triple)?;
    let mut s = String::new();
    for (c, list) in &arcs {
        let labels: Vec<String> = list.iter().map(|p| p.label()).collect();
        writeln!(s, "pc_arcs.{c}={}", labels.join(",")).unwrap();
    }
    for (x, y, same) in &r.pairs {
        writeln!(s, "pair={}:{},{}:{},same_type={same}", x.circle, x.label(), y.circle, y.label()).unwrap();
    }
    let classes: Vec<String> = r.class_violations.iter().map(|c| c.to_string()).collect();
    writeln!(s, "class_violations={}", classes.join(",")).unwrap();
    writeln!(s, "claim1_violations={}", r.violations()).unwrap();
    writeln!(s, "claim1_holds={}", r.holds() && r.class_violations.is_empty()).unwrap();
    Ok(s)
}

fn agarwal_text(w: &Wiring, cut: usize) -> anyhow::Result<String> {
    let d = agarwal_drawing(&w.cut(cut)?)?;
    let mut s = String::new();
    writeln!(s, "edges={}", d.edges.len()).unwrap();
    let odd: Vec<String> = d.odd_pairs().map(|(i, j)| format!("{i},{j}")).collect();
    writeln!(s, "independent_pairs={}", d.parities.len()).unwrap();
    writeln!(s, "odd_pairs={}", odd.join(";")).unwrap();
    let mixed: Vec<String> = d.mixed_sides.iter().map(|c| c.to_string()).collect();
    writeln!(s, "mixed_sides={}", mixed.join(",")).unwrap();
    writeln!(s, "all_even={}", d.all_even()).unwrap();
    Ok(s)
}

fn replace(a: &Arrangement, circle: usize, witness: Option<&[usize]>) -> anyhow::Result<Arrangement> {
    if circle >= a.n() {
        bail!(Error::OutOfRange(format!("circle {circle} with n={}", a.n())));
    }
    let w = match witness {
        None => cons::replacement_witness(a, circle).ok_or(Error::NoWitness(circle))?,
        Some(faces) if faces.len() != 4 => bail!(Error::InvalidWitness(format!("expected four faces, got {}", faces.len()))),
        Some(faces) => alternation_witnesses(a, circle)
            .into_iter()
            .find(|w| w.faces[..] == *faces)
            .ok_or_else(|| Error::InvalidWitness(format!("faces {faces:?} are not an alternating quadruple on circle {circle}")))?,
    };
    Ok(cons::replace_circle(a, &w)?)
}

fn enumerate(n: usize, constraints: Constraints, n5: bool, dir: &Path) -> anyhow::Result<String> {
    let options = EnumOptions { allow_n5: n5, reverse_slots: false };
    let orbits = enumerate_orbits(n, constraints, &options)?;
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let mut table = String::from("key\tfile\tvertices\tfaces\ttouchings\tdigons\tp2_combined\tp3\n");
    for o in &orbits {
        let file = format!("{}.wir", o.key.replace(':', "_"));
        fs::write(dir.join(&file), write_wir(&o.wiring)).with_context(|| format!("cannot write {file}"))?;
        let st = &o.stats;
        let vertices = o.wiring.events.len();
        writeln!(
            table,
            "{}\t{file}\t{vertices}\t{}\t{}\t{}\t{}\t{}",
            o.key, st.face_count, st.touchings, st.digons, st.p2_combined, st.triangles
        )
        .unwrap();
    }
    fs::write(dir.join("stats.tsv"), table).context("cannot write stats.tsv")?;
    Ok(summarize(n, &orbits).to_tsv())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Build { family, n, out } => emit(&build(family, n)?, out.as_deref(), false),
        Command::Stats { file, format } => {
            let r = report(&load(file.as_deref())?.arrangement)?;
            let text = match format {
                StatsFormat::Kv => r.to_kv(),
                StatsFormat::Tsv => r.to_tsv(),
            };
            write_output(None, &text)
        }
        Command::Validate { file } => {
            let file = file.as_deref();
            let text = read_text(file)?;
            if is_wiring_text(file, &text) {
                let w = parse_wir(&text)?;
                let report = w.validate();
                for v in &report.violations {
                    eprintln!("{v}");
                }
                w.ensure_valid()?;
                w.to_arrangement()?;
            } else {
                let a = parse_arr(&text)?;
                let report = a.validate();
                for v in &report.violations {
                    eprintln!("{v}");
                }
                a.ensure_valid()?;
            }
            write_output(None, "valid\n")
        }
        Command::Contract { file, face, out } => {
            let a = cons::contract_digon(&load(file.as_deref())?.arrangement, face)?;
            emit(&Input::from_arrangement(a), out.as_deref(), false)
        }
        Command::Relax { file, touch, side, out } => {
            let side: Side = side.parse()?;
            let a = cons::relax_touching(&load(file.as_deref())?.arrangement, touch, side)?;
            emit(&Input::from_arrangement(a), out.as_deref(), false)
        }
        Command::Blossom { file, circle, out } => {
            let a = cons::blossom(&load(file.as_deref())?.arrangement, circle)?;
            emit(&Input::from_arrangement(a), out.as_deref(), false)
        }
        Command::Replace { file, circle, witness, out } => {
            let a = replace(&load(file.as_deref())?.arrangement, circle, witness.as_deref())?;
            emit(&Input::from_arrangement(a), out.as_deref(), false)
        }
        Command::TouchingGraph { file, check } => {
            write_output(None, &touching_graph_text(&load(file.as_deref())?.arrangement, &check))
        }
        Command::Claims { file, triple, agarwal, cut } => {
            let input = load(file.as_deref())?;
            let text = match (triple, agarwal, cut) {
                (Some(t), _, _) => {
                    let triple: [usize; 3] = t.try_into().map_err(|t: Vec<usize>| {
                        Error::NotTouchingTriple(format!("expected three circles, got {}", t.len()))
                    })?;
                    claim1_text(&input.arrangement, triple)?
                }
                (None, true, Some(k)) => agarwal_text(input.wiring()?, k)?,
                _ => bail!(Error::OutOfRange("claims needs --triple i,j,k or --agarwal --cut K".into())),
            };
            write_output(None, &text)
        }
        Command::Enumerate { n, digon_free, allow_touch, n5, out } => {
            write_output(None, &enumerate(n, Constraints { digon_free, allow_touch }, n5, &out)?)
        }
        Command::Render { file, out, shade_triangles } => {
            let input = load(file.as_deref())?;
            let svg = render_svg(input.wiring()?, &RenderOptions { shade_cells: shade_triangles })?;
            write_output(out.as_deref(), &svg)
        }
        Command::Convert { file, out } => emit(&load(file.as_deref())?, out.as_deref(), false),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match e.downcast_ref::<Error>() {
                Some(domain) => eprintln!("error: {domain}"),
                None => eprintln!("error: io: {}", format!("{e:#}").replace('\n', " ")),
            }
            ExitCode::from(1)
        }
    }
}
