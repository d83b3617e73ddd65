//! The `mg` command line.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use mgauss_core::braid_reps::{
    braid_image, conjugate_representation, get_representation, is_virtually_symmetric, standard_conjugator,
    verify_representation, BraidWord, RepName,
};
use mgauss_core::diagrams::{apply_move, move_instances, MarkedGaussDiagram};
use mgauss_core::laurent::{braid_matrix, kernel_check, theta_conjugate, LinearRep};
use mgauss_core::presentations::{
    abelianization, group_of_braid, permutations, presentation_of_diagram, simplify, FiniteGroup, Presentation,
};
use mgauss_core::realization::{
    check_peripheral, longitude_alpha, meridian_longitude, realize_homomorph, realize_presentation,
    realize_with_peripheral, PeripheralPair, PeripheralReport,
};
use mgauss_core::words::{Word, WordContext};

use crate::formats::{self, FormatError, InputKind};
use crate::parallel;

#[derive(Parser)]
#[command(name = "mg", version, about = "Marked Gauss diagrams, virtual braid representations and their groups")]
struct Cli {
    /// Line-oriented key=value output.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Threads for homomorphism counting.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Input {
    /// `.gauss`, `.pres` or `.braid` file; stdin when omitted or `-`.
    #[arg(long = "in", value_name = "FILE")]
    path: Option<PathBuf>,
    /// Representation whose group `G_φ(β)` a braid input stands for.
    #[arg(long, default_value = "phiS")]
    rep: String,
    /// Parameter `r` of `w1`.
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
}

#[derive(Subcommand)]
enum Verb {
    /// Parse an input and print it in canonical form.
    Parse(Input),
    /// Print the group presentation of an input.
    Group {
        #[command(flatten)]
        input: Input,
        /// Print the abelianization instead.
        #[arg(long)]
        abelianization: bool,
        /// Tietze-simplify before printing.
        #[arg(long)]
        simplify: bool,
    },
    Abelianization(Input),
    /// Count homomorphisms into s3, s4, s5 or a Cayley table (`table:<file>`).
    Homcount {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: String,
    },
    /// Node invariants, abelianization and small hom counts.
    Invariants(Input),
    /// Apply moves to a diagram, or list the applicable ones.
    Move {
        #[command(flatten)]
        input: Input,
        #[arg(long = "apply", value_name = "SPEC")]
        apply: Vec<String>,
        #[arg(long)]
        list: bool,
    },
    #[command(subcommand)]
    Rep(RepVerb),
    #[command(subcommand)]
    Burau(BurauVerb),
    /// Burau images of Bigelow's kernel elements.
    Bigelow,
    /// Realize a presentation (or a conjugator chain) as a marked Gauss diagram.
    Realize {
        #[command(flatten)]
        input: Input,
        /// Conjugator `c` of the requested meridian `x0 = x1^c`.
        #[arg(long, value_name = "WORD", requires = "longitude")]
        x0: Option<String>,
        /// Requested longitude at `x0`.
        #[arg(long, value_name = "WORD")]
        longitude: Option<String>,
        /// `;`-separated conjugators `w_i` with `μ_{i+1} = μ_i^{w_i}`, over `x1..xn`, `v1`.
        #[arg(long, value_name = "WORDS", conflicts_with_all = ["x0", "longitude"])]
        chain: Option<String>,
        #[arg(long, requires_all = ["chain", "mu", "nu"])]
        target: Option<String>,
        /// Comma-separated images of `μ_1..μ_n`.
        #[arg(long, requires = "target")]
        mu: Option<String>,
        #[arg(long, requires = "target")]
        nu: Option<String>,
    },
    /// Meridian, longitude and the peripheral checks.
    Peripheral {
        #[command(flatten)]
        input: Input,
        /// Arc of the meridian, from 1.
        #[arg(long, default_value_t = 1)]
        arc: usize,
        /// Meridian word, for presentation inputs.
        #[arg(long, requires = "longitude")]
        meridian: Option<String>,
        #[arg(long, requires = "meridian")]
        longitude: Option<String>,
    },
    /// Connected sum of two diagrams.
    Connectsum {
        left: PathBuf,
        right: PathBuf,
        /// Splice points `<circle>:<gap>,<circle>:<gap>`.
        #[arg(long, default_value = "1:0,1:0")]
        at: String,
    },
    /// Reverse every circle and negate all signs.
    Reverse(Input),
}

#[derive(Args)]
struct RepArgs {
    #[arg(long)]
    rep: String,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum RepVerb {
    /// Check every virtual braid relation.
    Verify(RepArgs),
    /// Image of a braid word.
    Image {
        #[arg(long)]
        rep: String,
        #[arg(long, allow_negative_numbers = true)]
        r: Option<i64>,
        #[arg(long, requires = "braid")]
        n: Option<u32>,
        #[arg(long, requires = "n")]
        braid: Option<String>,
        /// `.braid` file, used when `--braid` is absent.
        #[arg(long = "in", value_name = "FILE")]
        path: Option<PathBuf>,
    },
    /// Conjugate by the standard map and compare with the tilde form.
    Equiv(RepArgs),
}

#[derive(Subcommand)]
enum BurauVerb {
    /// Matrix of a braid word.
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        braid: String,
        /// burau, burau_local, psi or bf.
        #[arg(long, default_value = "burau")]
        rep: String,
        /// Conjugate by `θ = diag(1, t_1, t_1 t_2, ...)`.
        #[arg(long)]
        theta: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] mgauss_core::Error),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

type Outcome = Result<bool, Failure>;

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    porcelain: bool,
    jobs: usize,
}

/// Run `mg` with `args` (program name first). Returns the exit code: 0 on
/// success, 1 when an operation or verification fails, 2 on usage errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_out = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if to_out {
                let _ = write!(out, "{text}");
                return 0;
            }
            let _ = write!(err, "{text}");
            return 2;
        }
    };
    let jobs = cli.jobs.unwrap_or_else(parallel::default_jobs);
    let mut ctx = Ctx { stdin, out, porcelain: cli.porcelain, jobs };
    match dispatch(&mut ctx, cli.verb) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum Loaded {
    Gauss(MarkedGaussDiagram),
    Pres(Presentation),
    Braid(BraidWord),
}

impl Ctx<'_> {
    fn read(&mut self, path: Option<&Path>) -> Result<String, Failure> {
        match path {
            Some(p) if p != Path::new("-") => {
                std::fs::read_to_string(p).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", p.display())))
            }
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| Failure::Domain(format!("cannot read stdin: {e}")))?;
                Ok(s)
            }
        }
    }

    fn load(&mut self, path: Option<&Path>) -> Result<Loaded, Failure> {
        let text = self.read(path)?;
        let by_ext = path.and_then(|p| p.extension()).and_then(|e| e.to_str()).and_then(|e| match e {
            "gauss" => Some(InputKind::Gauss),
            "pres" => Some(InputKind::Presentation),
            "braid" => Some(InputKind::Braid),
            _ => None,
        });
        let kind = by_ext
            .or_else(|| formats::sniff(&text))
            .ok_or_else(|| Failure::Domain("cannot tell the input format".into()))?;
        Ok(match kind {
            InputKind::Gauss => Loaded::Gauss(formats::parse_gauss_code(&text)?),
            InputKind::Presentation => Loaded::Pres(formats::parse_presentation(&text)?),
            InputKind::Braid => Loaded::Braid(formats::parse_braid_file(&text)?),
        })
    }

    fn group(&mut self, input: &Input) -> Result<(Presentation, Loaded), Failure> {
        let loaded = self.load(input.path.as_deref())?;
        let p = match &loaded {
            Loaded::Gauss(d) => presentation_of_diagram(d),
            Loaded::Pres(p) => p.clone(),
            Loaded::Braid(b) => {
                let spec = get_representation(RepName::parse(&input.rep, input.r)?, b.strands())?;
                group_of_braid(&spec, b)?
            }
        };
        Ok((p, loaded))
    }

    fn diagram(&mut self, path: Option<&Path>) -> Result<MarkedGaussDiagram, Failure> {
        match self.load(path)? {
            Loaded::Gauss(d) => Ok(d),
            _ => Err(Failure::Domain("expected a marked Gauss diagram".into())),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<(), Failure> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    /// `key=value` in porcelain mode, `human` otherwise.
    fn kv(&mut self, key: &str, value: impl std::fmt::Display, human: impl FnOnce() -> String) -> Result<(), Failure> {
        if self.porcelain {
            self.line(format!("{key}={value}"))
        } else {
            let h = human();
            self.line(h)
        }
    }
}

fn abelianization_line(p: &Presentation) -> String {
    let (rank, torsion) = abelianization(p);
    let t: Vec<String> = torsion.iter().map(u64::to_string).collect();
    format!("free_rank={rank} torsion=[{}]", t.join(","))
}

/// A finite target group and how its elements are written.
struct Target {
    label: String,
    group: FiniteGroup,
    /// Degree, for symmetric groups written in one-line notation.
    degree: Option<usize>,
}

impl Target {
    fn parse(spec: &str, ctx: &mut Ctx) -> Result<Target, Failure> {
        if let Some(path) = spec.strip_prefix("table:") {
            let text = ctx.read(Some(Path::new(path)))?;
            return Ok(Target { label: spec.into(), group: formats::parse_table(&text)?, degree: None });
        }
        let k = spec
            .strip_prefix(['s', 'S'])
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|k| (1..=6).contains(k))
            .ok_or_else(|| Failure::Usage(format!("unknown target `{spec}` (s1..s6 or table:<file>)")))?;
        Ok(Target { label: format!("s{k}"), group: FiniteGroup::symmetric(k), degree: Some(k) })
    }

    fn element(&self, text: &str) -> Result<u32, Failure> {
        let bad = || Failure::Usage(format!("bad element `{text}` of {}", self.label));
        match self.degree {
            None => text.parse::<u32>().ok().filter(|&a| (a as usize) < self.group.order()).ok_or_else(bad),
            Some(k) => {
                let perm: Vec<u8> = text
                    .chars()
                    .map(|c| c.to_digit(10).filter(|&d| d >= 1).map(|d| d as u8 - 1))
                    .collect::<Option<_>>()
                    .ok_or_else(bad)?;
                permutations(k).iter().position(|p| *p == perm).map(|i| i as u32).ok_or_else(bad)
            }
        }
    }

    fn show(&self, a: u32) -> String {
        match self.degree {
            None => a.to_string(),
            Some(k) => permutations(k)[a as usize].iter().map(|d| char::from(b'1' + d)).collect(),
        }
    }
}

fn dispatch(ctx: &mut Ctx, verb: Verb) -> Outcome {
    match verb {
        Verb::Parse(input) => {
            let text = match ctx.load(input.path.as_deref())? {
                Loaded::Gauss(d) => formats::format_gauss_code(&d),
                Loaded::Pres(p) => formats::format_presentation(&p),
                Loaded::Braid(b) => formats::format_braid_file(&b),
            };
            write!(ctx.out, "{text}")?;
            Ok(true)
        }
        Verb::Group { input, abelianization, simplify: simp } => {
            let (p, _) = ctx.group(&input)?;
            let p = if simp { simplify(&p) } else { p };
            if abelianization {
                ctx.line(abelianization_line(&p))?;
            } else {
                write!(ctx.out, "{}", formats::format_presentation(&p))?;
            }
            Ok(true)
        }
        Verb::Abelianization(input) => {
            let (p, _) = ctx.group(&input)?;
            ctx.line(abelianization_line(&p))?;
            Ok(true)
        }
        Verb::Homcount { input, target } => {
            let t = Target::parse(&target, ctx)?;
            let (p, _) = ctx.group(&input)?;
            let count = parallel::hom_count(&simplify(&p), &t.group, ctx.jobs)?;
            if ctx.porcelain {
                ctx.line(format!("target={}", t.label))?;
                ctx.line(format!("count={count}"))?;
            } else {
                ctx.line(format!("{count} homomorphisms into {}", t.label))?;
            }
            Ok(true)
        }
        Verb::Invariants(input) => invariants(ctx, &input),
        Verb::Move { input, apply, list } => {
            if apply.is_empty() == !list {
                return Err(Failure::Usage("give either --apply <spec> or --list".into()));
            }
            let mut d = ctx.diagram(input.path.as_deref())?;
            if list {
                for m in move_instances(&d) {
                    ctx.line(formats::format_move(&m))?;
                }
                return Ok(true);
            }
            for spec in &apply {
                let m = formats::parse_move(spec).map_err(|e| Failure::Usage(e.to_string()))?;
                d = apply_move(&d, &m)?;
            }
            write!(ctx.out, "{}", formats::format_gauss_code(&d))?;
            Ok(true)
        }
        Verb::Rep(r) => rep(ctx, r),
        Verb::Burau(BurauVerb::Eval { n, braid, rep, theta }) => {
            let lr = LinearRep::parse(&rep)?;
            let b = formats::parse_braid(&braid, n)?;
            let mut m = braid_matrix(lr, &b)?;
            if theta {
                m = theta_conjugate(&m, n)?;
            }
            if ctx.porcelain {
                for i in 0..m.size() {
                    for j in 0..m.size() {
                        ctx.line(format!("m{}_{}={}", i + 1, j + 1, m.get(i, j)))?;
                    }
                }
                ctx.line(format!("identity={}", m.is_identity()))?;
            } else {
                ctx.line(format!("{m}"))?;
            }
            Ok(true)
        }
        Verb::Bigelow => {
            let r = kernel_check()?;
            if ctx.porcelain {
                ctx.line(format!("b1_letters={}", r.b1_letters))?;
                ctx.line(format!("b1_identity={}", r.b1_identity))?;
                ctx.line(format!("b2_letters={}", r.b2_letters))?;
                ctx.line(format!("b2_identity={}", r.b2_identity))?;
            } else {
                let show = |ok: bool| if ok { "identity" } else { "not the identity" };
                ctx.line(format!("b1 in B5 ({} letters): Burau image is {}", r.b1_letters, show(r.b1_identity)))?;
                ctx.line(format!("b2 in B6 ({} letters): Burau image is {}", r.b2_letters, show(r.b2_identity)))?;
            }
            Ok(r.both_identity())
        }
        Verb::Realize { input, x0, longitude, chain, target, mu, nu } => {
            if let Some(chain) = chain {
                return realize_chain(ctx, &chain, target.as_deref(), mu.as_deref(), nu.as_deref());
            }
            let p = match ctx.load(input.path.as_deref())? {
                Loaded::Pres(p) => p,
                _ => return Err(Failure::Domain("realize expects a presentation".into())),
            };
            match longitude {
                None => {
                    let d = realize_presentation(&p)?;
                    write!(ctx.out, "{}", formats::format_gauss_code(&d))?;
                    let pair = meridian_longitude(&d, 0)?;
                    peripheral_comments(ctx, &d, &pair)
                }
                Some(l) => {
                    let c = match &x0 {
                        Some(c) => formats::parse_word_in(c, &p)?,
                        None => Word::identity(),
                    };
                    let l = formats::parse_word_in(&l, &p)?;
                    let r = realize_with_peripheral(&p, &c, &l)?;
                    write!(ctx.out, "{}", formats::format_gauss_code(&r.diagram))?;
                    let map: Vec<String> =
                        p.x_names().iter().zip(&r.x_map).map(|(n, a)| format!("{n}->x{a}")).collect();
                    ctx.line(format!("# x_map={}", map.join(",")))?;
                    for w in &r.warnings {
                        ctx.line(format!("# warning={w}"))?;
                    }
                    peripheral_comments(ctx, &r.diagram, &r.pair)
                }
            }
        }
        Verb::Peripheral { input, arc, meridian, longitude } => {
            match (ctx.load(input.path.as_deref())?, meridian, longitude) {
                (Loaded::Gauss(d), None, None) => {
                    if arc == 0 || arc > d.arc_count() {
                        return Err(Failure::Usage(format!("arc {arc} out of range 1..={}", d.arc_count())));
                    }
                    let pair = meridian_longitude(&d, arc - 1)?;
                    let c = d.circle_of_arc(arc - 1).expect("arc in range");
                    let pd = presentation_of_diagram(&d);
                    ctx.kv("meridian", &pair.meridian, || format!("meridian:  {}", pair.meridian))?;
                    ctx.kv("longitude", &pair.longitude, || format!("longitude: {}", pair.longitude))?;
                    let alpha = longitude_alpha(&d, c);
                    ctx.kv("alpha", alpha, || format!("alpha:     {alpha}"))?;
                    let report = check_peripheral(&pd, &pair)?;
                    report_lines(ctx, &report, "")?;
                    Ok(report.passed())
                }
                (Loaded::Pres(p), Some(m), Some(l)) => {
                    let pair = PeripheralPair {
                        meridian: formats::parse_word_in(&m, &p)?,
                        longitude: formats::parse_word_in(&l, &p)?,
                    };
                    let report = check_peripheral(&p, &pair)?;
                    report_lines(ctx, &report, "")?;
                    Ok(report.passed())
                }
                (Loaded::Pres(_), _, _) => {
                    Err(Failure::Usage("presentation input needs --meridian and --longitude".into()))
                }
                (Loaded::Gauss(_), _, _) => {
                    Err(Failure::Usage("--meridian/--longitude only apply to presentations".into()))
                }
                (Loaded::Braid(_), _, _) => Err(Failure::Domain("expected a diagram or presentation".into())),
            }
        }
        Verb::Connectsum { left, right, at } => {
            let bad = || Failure::Usage(format!("bad splice points `{at}`, expected c1:g1,c2:g2"));
            let pts: Vec<(usize, usize)> = at
                .split(',')
                .map(|s| {
                    let (c, g) = s.trim().split_once(':')?;
                    let c = c.parse::<usize>().ok()?.checked_sub(1)?;
                    Some((c, g.parse::<usize>().ok()?))
                })
                .collect::<Option<_>>()
                .ok_or_else(bad)?;
            let [(c1, g1), (c2, g2)] = pts[..] else { return Err(bad()) };
            let d1 = ctx.diagram(Some(&left))?;
            let d2 = ctx.diagram(Some(&right))?;
            let d = MarkedGaussDiagram::connected_sum(&d1, c1, g1, &d2, c2, g2)?;
            write!(ctx.out, "{}", formats::format_gauss_code(&d))?;
            Ok(true)
        }
        Verb::Reverse(input) => {
            let d = ctx.diagram(input.path.as_deref())?;
            write!(ctx.out, "{}", formats::format_gauss_code(&d.reverse()))?;
            Ok(true)
        }
    }
}

fn invariants(ctx: &mut Ctx, input: &Input) -> Outcome {
    let (p, loaded) = ctx.group(input)?;
    if let Loaded::Gauss(d) = &loaded {
        let (count, sum, product) = d.node_invariants();
        let arrows = d.arrows().len();
        let circles = d.circle_count();
        ctx.kv("circles", circles, || format!("circles:  {circles}"))?;
        ctx.kv("arrows", arrows, || format!("arrows:   {arrows}"))?;
        if ctx.porcelain {
            ctx.line(format!("nodes={count}"))?;
            ctx.line(format!("node_sum={sum}"))?;
            ctx.line(format!("node_product={product}"))?;
        } else {
            ctx.line(format!("nodes:    {count} (sum {sum}, product {product})"))?;
        }
    }
    let (rank, torsion) = abelianization(&p);
    let t: Vec<String> = torsion.iter().map(u64::to_string).collect();
    if ctx.porcelain {
        ctx.line(format!("free_rank={rank}"))?;
        ctx.line(format!("torsion=[{}]", t.join(",")))?;
    } else {
        ctx.line(format!("abelianization: {}", abelianization_line(&p)))?;
    }
    let q = simplify(&p);
    for k in [3, 4] {
        let c = parallel::hom_count(&q, &FiniteGroup::symmetric(k), ctx.jobs)?;
        ctx.kv(&format!("homs_s{k}"), c, || format!("homs into s{k}: {c}"))?;
    }
    Ok(true)
}

fn rep(ctx: &mut Ctx, verb: RepVerb) -> Outcome {
    match verb {
        RepVerb::Verify(a) => {
            let spec = get_representation(RepName::parse(&a.rep, a.r)?, a.n)?;
            let report = verify_representation(&spec)?;
            if report.ok {
                ctx.line(format!("ok relations={}", report.relations_checked))?;
            } else {
                ctx.line(format!("failed relations={} failures={}", report.relations_checked, report.failures.len()))?;
                for f in &report.failures {
                    ctx.line(format!("# {}: {} -> {} vs {}", f.relation, f.generator, f.lhs_image, f.rhs_image))?;
                }
            }
            Ok(report.ok)
        }
        RepVerb::Image { rep, r, n, braid, path } => {
            let b = match (braid, n) {
                (Some(w), Some(n)) => formats::parse_braid(&w, n)?,
                _ => {
                    let text = ctx.read(path.as_deref())?;
                    formats::parse_braid_file(&text)?
                }
            };
            let spec = get_representation(RepName::parse(&rep, r)?, b.strands())?;
            let image = braid_image(&spec, &b)?;
            for (g, w) in image.images() {
                if ctx.porcelain {
                    ctx.line(format!("{g}={w}"))?;
                } else {
                    ctx.line(format!("{g} -> {w}"))?;
                }
            }
            Ok(true)
        }
        RepVerb::Equiv(a) => {
            let name = RepName::parse(&a.rep, a.r)?;
            let spec = get_representation(name, a.n)?;
            let symmetric = is_virtually_symmetric(&spec);
            let Some(partner) = name.tilde_partner() else {
                ctx.kv("virtually_symmetric", symmetric, || {
                    format!("{name} has no tilde partner; virtually symmetric: {symmetric}")
                })?;
                return Ok(true);
            };
            let (phi, phi_inv) = standard_conjugator(name, a.n).expect("partner has a conjugator");
            let conj = conjugate_representation(&spec, &phi, &phi_inv)?;
            let target = get_representation(partner, a.n)?;
            let same = conj.same_images(&target);
            let target_symmetric = is_virtually_symmetric(&target);
            if ctx.porcelain {
                ctx.line(format!("rep={name}"))?;
                ctx.line(format!("partner={partner}"))?;
                ctx.line(format!("equal={same}"))?;
                ctx.line(format!("virtually_symmetric={symmetric}"))?;
                ctx.line(format!("partner_virtually_symmetric={target_symmetric}"))?;
            } else {
                let verdict = if same { "ok" } else { "mismatch" };
                ctx.line(format!("{verdict} {name} conjugates to {partner} on {} strands", a.n))?;
                ctx.line(format!("virtually symmetric: {name} {symmetric}, {partner} {target_symmetric}"))?;
            }
            Ok(same)
        }
    }
}

fn report_lines(ctx: &mut Ctx, report: &PeripheralReport, prefix: &str) -> Result<(), Failure> {
    let ok = |b: bool| if b { "ok" } else { "fail" };
    ctx.line(format!("{prefix}syntactic={}", ok(report.syntactic)))?;
    for q in &report.quotients {
        let v = match q.commute {
            Some(true) => "commute",
            Some(false) => "fail",
            None => "unknown",
        };
        ctx.line(format!("{prefix}{}={v}", q.group))?;
    }
    Ok(())
}

/// Peripheral report as `#` comments, so the output still parses as Gauss code.
fn peripheral_comments(ctx: &mut Ctx, d: &MarkedGaussDiagram, pair: &PeripheralPair) -> Outcome {
    let c = d.circle_of_arc(pair.meridian.as_generator().map_or(0, |g| g.index as usize - 1)).unwrap_or(0);
    if !ctx.porcelain {
        ctx.line("# peripheral pair")?;
    }
    ctx.line(format!("# meridian={}", pair.meridian))?;
    ctx.line(format!("# longitude={}", pair.longitude))?;
    ctx.line(format!("# alpha={}", longitude_alpha(d, c)))?;
    let report = check_peripheral(&presentation_of_diagram(d), pair)?;
    report_lines(ctx, &report, "# ")?;
    Ok(report.passed())
}

fn realize_chain(ctx: &mut Ctx, chain: &str, target: Option<&str>, mu: Option<&str>, nu: Option<&str>) -> Outcome {
    let parts: Vec<&str> = chain.split(';').collect();
    let n = parts.len() as u32;
    let wctx = WordContext::new(n, 1);
    let ws = parts.iter().map(|w| formats::parse_word(w, wctx)).collect::<Result<Vec<_>, _>>()?;
    let target = target.map(|t| Target::parse(t, ctx)).transpose()?;
    let images = match (&target, mu, nu) {
        (Some(t), Some(mu), Some(nu)) => {
            let mu = mu.split(',').map(|e| t.element(e.trim())).collect::<Result<Vec<_>, _>>()?;
            if mu.len() != ws.len() {
                return Err(Failure::Usage(format!("{} conjugators but {} images in --mu", ws.len(), mu.len())));
            }
            Some((mu, t.element(nu.trim())?))
        }
        _ => None,
    };
    let h = realize_homomorph(
        &ws,
        target.as_ref().zip(images.as_ref()).map(|(t, (mu, nu))| (&t.group, mu.as_slice(), *nu)),
    )?;
    write!(ctx.out, "{}", formats::format_gauss_code(&h.diagram))?;
    for (i, w) in h.assignment.iter().enumerate() {
        ctx.line(format!("# x{}={w}", i + 1))?;
    }
    if let (Some(t), Some(li)) = (&target, h.longitude_image) {
        ctx.line("# homomorphism=ok")?;
        ctx.line(format!("# longitude_image={}", t.show(li)))?;
    }
    Ok(true)
}
