use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use sheet_atlas::fixtures::{table1_json, table2_json, write_fixtures, TABLE1_FILE, TABLE2_FILE};
use sheet_atlas::hitchin::{dim_hitchin_base, hitchin_report};
use sheet_atlas::multiplicity::{multiplicity_report, SlicePoint};
use sheet_atlas::realforms::sheet_of_real_form;
use sheet_atlas::ring::parse_rational;
use sheet_atlas::sheets::{sheet_by_id, sheet_by_levi, sheets_of_kind};
use sheet_atlas::spectral::{in_heart, min_poly, mu_s};
use sheet_atlas::triples::{build_bcd_triple, build_gl_triple, verify_sp4_slice, Report, SliceVariant};
use sheet_atlas::{
    AtlasError, GradedPolynomial, GroupKind, LeviLabel, MultiplicityProfile, Partition, Rational, RealFormLabel,
    SheetBasePoint, SheetDescriptor,
};

/// `println!` that stops quietly when the reader goes away (`| head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(name = "sheet-atlas", version, about = "Exact computations with sheets of reductive Lie algebras")]
struct Cli {
    /// Print JSON instead of tables.
    #[arg(long, global = true, env = "SHEET_ATLAS_JSON", value_parser = clap::builder::BoolishValueParser::new())]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the tabulated sheets of a group.
    Sheets {
        #[command(flatten)]
        group: GroupArgs,
        /// Restrict to the sheet with this Levi.
        #[arg(long)]
        levi: Option<String>,
    },
    /// Print one sheet descriptor as JSON.
    SheetInfo(SheetArgs),
    /// Build an sl2-triple (or the Sp4 slice) and check its properties.
    TripleVerify {
        /// `gl:m1,m2`, `bcd:K,a,res` with K one of B, C, D, or `sp4-slice`.
        #[arg(long)]
        case: String,
        /// Use the slice entry `t^2` instead of `4t^2`.
        #[arg(long)]
        as_printed: bool,
        /// Skip the centraliser dimension check.
        #[arg(long)]
        no_centralizer: bool,
        /// Include the matrices in JSON output.
        #[arg(long)]
        matrices: bool,
    },
    /// Dimensions of the Hitchin base and of a sheet's S-Hitchin base.
    HitchinDim {
        #[arg(long)]
        genus: u64,
        #[command(flatten)]
        sheet: SheetArgs,
    },
    /// The composition map on a point of a gl_n S-Hitchin base.
    MuS {
        /// Multiplicities `l_1,...,l_s`.
        #[arg(long, conflicts_with = "levi")]
        profile: Option<String>,
        /// Levi partition, as an alternative to `--profile`.
        #[arg(long)]
        levi: Option<String>,
        /// Lower coefficients `a_1,...,a_l` of each monic factor, `;`-separated.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "point")]
        factors: Option<String>,
        /// A whole point as JSON, as printed by `--json`.
        #[arg(long, conflicts_with_all = ["profile", "levi", "factors"])]
        point: Option<String>,
    },
    /// Orbit-method multiplicity at a point of the Katsylo slice.
    Multiplicity {
        #[arg(long)]
        sheet: String,
        /// Slice coordinates, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Sheet attached to a real form.
    Realform {
        /// `SU:p,q` or `SOSTAR:n`.
        #[arg(long)]
        label: String,
        #[arg(long)]
        genus: Option<u64>,
    },
    /// Regenerate or check the golden tables.
    Fixtures {
        #[arg(long, required_unless_present = "check")]
        regen: bool,
        /// Compare against the files on disk instead of writing.
        #[arg(long, conflicts_with = "regen")]
        check: bool,
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// A, B, C, D or F4.
    #[arg(long)]
    kind: String,
    /// Rank; for A this is the matrix size.
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args)]
struct SheetArgs {
    /// Sheet id such as `Sp4:S_Dix` or `GL4:(2,1,1)`.
    #[arg(long, conflicts_with_all = ["kind", "levi"])]
    sheet: Option<String>,
    #[arg(long, required_unless_present = "sheet")]
    kind: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    levi: Option<String>,
}

/// Failure of a command: the message and the exit status.
struct Failure {
    message: String,
    code: u8,
}

impl From<AtlasError> for Failure {
    fn from(e: AtlasError) -> Self {
        let code = if matches!(e, AtlasError::Parse(_)) { 2 } else { 1 };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            message: e.to_string(),
            code: 1,
        }
    }
}

type CmdResult = Result<(), Failure>;

fn parse_error(msg: impl Into<String>) -> Failure {
    Failure {
        message: msg.into(),
        code: 2,
    }
}

fn print_json<T: Serialize>(value: &T) {
    out!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn group(kind: &str, rank: Option<usize>) -> Result<GroupKind, AtlasError> {
    GroupKind::new(kind, rank)
}

impl SheetArgs {
    fn resolve(&self) -> Result<Option<SheetDescriptor>, AtlasError> {
        if let Some(id) = &self.sheet {
            return sheet_by_id(id).map(Some);
        }
        let kind = group(self.kind.as_deref().unwrap_or_default(), self.rank)?;
        match &self.levi {
            Some(l) => sheet_by_levi(kind, &LeviLabel::parse(kind, l)?).map(Some),
            None => Ok(None),
        }
    }

    fn kind(&self) -> Result<GroupKind, AtlasError> {
        match &self.sheet {
            Some(id) => Ok(sheet_by_id(id)?.kind),
            None => group(self.kind.as_deref().unwrap_or_default(), self.rank),
        }
    }
}

fn orbit_text(s: &SheetDescriptor) -> String {
    match &s.nilpotent_orbit {
        sheet_atlas::NilpotentOrbit::Partition(p) => p.to_string(),
        sheet_atlas::NilpotentOrbit::BalaCarter(l) => l.clone(),
    }
}

fn sheets(json: bool, group_args: &GroupArgs, levi: Option<&str>) -> CmdResult {
    let kind = group(&group_args.kind, group_args.rank)?;
    let rows = match levi {
        Some(l) => vec![sheet_by_levi(kind, &LeviLabel::parse(kind, l)?)?],
        None => sheets_of_kind(kind)?,
    };
    if json {
        print_json(&rows);
        return Ok(());
    }
    out!(
        "{:<20} {:<16} {:>4} {:>5} {:>6} {:>4} {:>6} {:>5}",
        "sheet", "orbit", "d", "dim_z", "|W_L|", "|F|", "dim S", "class"
    );
    for s in rows {
        let class = s.class_tag.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        out!(
            "{:<20} {:<16} {:>4} {:>5} {:>6} {:>4} {:>6} {:>5}",
            s.id(),
            orbit_text(&s),
            s.d,
            s.dim_z,
            s.w_l_order.to_string(),
            s.katsylo_order,
            s.dim_sheet,
            class
        );
    }
    Ok(())
}

fn sheet_info(args: &SheetArgs) -> CmdResult {
    let sheet = args
        .resolve()?
        .ok_or_else(|| parse_error("sheet-info needs --sheet or --levi"))?;
    print_json(&sheet);
    Ok(())
}

fn print_report(report: &Report) {
    out!("{}", report.subject);
    for c in &report.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        match &c.detail {
            Some(d) => out!("  {mark}  {}  [{d}]", c.name),
            None => out!("  {mark}  {}", c.name),
        }
    }
}

fn triple_verify(json: bool, case: &str, as_printed: bool, centralizer: bool, matrices: bool) -> CmdResult {
    let bad = || parse_error(format!("bad case {case:?}: expected gl:m1,m2, bcd:K,a,res or sp4-slice"));
    let nums = |s: &str| -> Result<Vec<usize>, Failure> {
        s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect()
    };
    if as_printed && case != "sp4-slice" {
        return Err(parse_error("--as-printed applies only to sp4-slice"));
    }
    let (report, triple) = if case == "sp4-slice" {
        let variant = if as_printed { SliceVariant::AsPrinted } else { SliceVariant::Corrected };
        (verify_sp4_slice(variant)?, None)
    } else if let Some(rest) = case.strip_prefix("gl:") {
        let [m1, m2] = nums(rest)?[..] else { return Err(bad()) };
        let t = build_gl_triple(m1, m2)?;
        (t.verify(centralizer)?, Some(t))
    } else if let Some(rest) = case.strip_prefix("bcd:") {
        let (letter, tail) = rest.split_once(',').ok_or_else(bad)?;
        let [a, residual] = nums(tail)?[..] else { return Err(bad()) };
        let kind = classical_kind(letter.trim(), a, residual)?;
        let t = build_bcd_triple(kind, &LeviLabel::MaxLevi { a, residual })?;
        (t.verify(centralizer)?, Some(t))
    } else {
        return Err(bad());
    };
    if json {
        let mut out = json!({ "passed": report.all_passed(), "report": report });
        if let (true, Some(t)) = (matrices, &triple) {
            out["triple"] = serde_json::to_value(t).expect("triple serializes");
        }
        print_json(&out);
    } else {
        print_report(&report);
        if matrices {
            if let Some(t) = &triple {
                out!("e =\n{}\nh =\n{}\nf =\n{}", t.e, t.h, t.f);
            }
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        Err(Failure {
            message: format!("{} check(s) failed: {}", names.len(), names.join("; ")),
            code: 1,
        })
    }
}

/// The group of a maximal Levi `GL_a x G'`, from the family letter and the
/// block data; the rank is determined by `a` and the residual.
fn classical_kind(letter: &str, a: usize, residual: usize) -> Result<GroupKind, AtlasError> {
    let family: String = letter.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    let rank = match family.to_ascii_uppercase().as_str() {
        "C" => a + residual,
        "B" | "D" => (2 * a + residual) / 2,
        other => return Err(AtlasError::Parse(format!("bcd case needs family B, C or D, got {other:?}"))),
    };
    let kind = GroupKind::new(&family, Some(rank))?;
    let digits = &letter[family.len()..];
    if !digits.is_empty() && digits.parse::<usize>().ok() != Some(rank) {
        return Err(AtlasError::KindMismatch(format!(
            "{letter} does not contain a Levi GL{a} x ({residual})"
        )));
    }
    Ok(kind)
}

fn hitchin_dim(json: bool, genus: u64, args: &SheetArgs) -> CmdResult {
    match args.resolve()? {
        None => {
            let kind = args.kind()?;
            let d = dim_hitchin_base(kind, genus)?;
            if json {
                print_json(&json!({ "group": kind.to_string(), "genus": genus, "dim_base": d }));
            } else {
                out!("{d}");
            }
        }
        Some(sheet) => {
            let r = hitchin_report(&sheet, genus)?;
            if json {
                print_json(&r);
            } else {
                let cameral = r.cameral_degree.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into());
                out!("sheet           {}", r.sheet);
                out!("genus           {}", r.genus);
                out!("dim_base        {}", r.dim_base);
                out!("dim_s_base      {}", r.dim_s_base);
                out!("components      {}", r.components);
                out!("cameral_degree  {cameral}");
                out!("weights         {:?}", r.weights.weights());
            }
        }
    }
    Ok(())
}

fn parse_factor(s: &str) -> Result<GradedPolynomial<Rational>, AtlasError> {
    if s.trim().is_empty() {
        return Ok(GradedPolynomial::one());
    }
    let a = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    Ok(GradedPolynomial::from_coefficients(a))
}

fn mu_s_cmd(
    json: bool,
    profile: Option<&str>,
    levi: Option<&str>,
    factors: Option<&str>,
    point: Option<&str>,
) -> CmdResult {
    let point: SheetBasePoint<Rational> = match point {
        Some(text) => serde_json::from_str(text).map_err(|e| parse_error(format!("bad point JSON: {e}")))?,
        None => {
            let profile = match (profile, levi) {
                (Some(p), _) => {
                    let l = p
                        .split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| parse_error(format!("bad profile {p:?}")))?;
                    MultiplicityProfile::from_multiplicities(l)
                }
                (None, Some(m)) => m.parse::<Partition>()?.profile(),
                (None, None) => return Err(parse_error("mu-s needs --profile, --levi or --point")),
            };
            let factors = factors
                .unwrap_or_default()
                .split(';')
                .map(parse_factor)
                .collect::<Result<Vec<_>, _>>()?;
            SheetBasePoint::new(profile, factors)?
        }
    };
    let image = mu_s(&point);
    let heart = in_heart(&point);
    if json {
        print_json(&json!({
            "point": point,
            "image": image,
            "min_poly": min_poly(&point),
            "in_heart": heart,
        }));
    } else {
        out!("image     {image}");
        out!("min_poly  {}", min_poly(&point));
        out!("in_heart  {heart}");
    }
    Ok(())
}

fn multiplicity_cmd(json: bool, sheet: &str, z: &str) -> CmdResult {
    let sheet = sheet_by_id(sheet)?;
    let z = z.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    let r = multiplicity_report(&SlicePoint::new(sheet, z)?)?;
    if json {
        print_json(&r);
    } else {
        let pol = r.polarisations.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
        out!("sheet          {}", r.sheet);
        out!("z              ({})", r.z.join(", "));
        out!("multiplicity   {}", r.multiplicity);
        out!("inertia_order  {}", r.inertia_order);
        out!("katsylo_order  {}", r.katsylo_order);
        out!("polarisations  {pol}");
    }
    Ok(())
}

fn realform_cmd(json: bool, label: &str, genus: Option<u64>) -> CmdResult {
    let report = sheet_of_real_form(RealFormLabel::parse(label)?);
    let evaluated = genus.map(|g| report.evaluate_extra(g)).transpose()?;
    if json {
        let mut out = serde_json::to_value(&report).expect("report serializes");
        if let (Some(g), Some(values)) = (genus, &evaluated) {
            out["genus"] = json!(g);
            out["evaluated"] = json!(values);
        }
        print_json(&out);
        return Ok(());
    }
    out!("form               {}", report.label);
    out!("group              {}", report.group);
    out!("levi               {}", report.levi_description.as_deref().unwrap_or("-"));
    out!("quasi_split        {}", report.quasi_split);
    out!("abelianised_target {}", report.abelianised_target.as_deref().unwrap_or("-"));
    if let Some(r) = report.j_h_rank {
        out!("J^H rank           {r}");
    }
    for (name, value) in &report.extra {
        match evaluated.as_ref().and_then(|v| v.get(name)) {
            Some(n) => out!("{name:<18} {value} = {n}"),
            None => out!("{name:<18} {value}"),
        }
    }
    for note in &report.notes {
        out!("note: {note}");
    }
    Ok(())
}

fn fixtures_cmd(check: bool, out: &PathBuf) -> CmdResult {
    if !check {
        for path in write_fixtures(out)? {
            eprintln!("wrote {}", path.display());
        }
        return Ok(());
    }
    let mut stale = Vec::new();
    for (name, body) in [(TABLE1_FILE, table1_json()), (TABLE2_FILE, table2_json())] {
        let path = out.join(name);
        if std::fs::read_to_string(&path).ok().as_deref() != Some(body.as_str()) {
            stale.push(path.display().to_string());
        }
    }
    if stale.is_empty() {
        Ok(())
    } else {
        Err(Failure {
            message: format!("fixtures differ from regenerated output: {}", stale.join(", ")),
            code: 1,
        })
    }
}

fn run(cli: Cli) -> CmdResult {
    let json = cli.json;
    match &cli.command {
        Command::Sheets { group, levi } => sheets(json, group, levi.as_deref()),
        Command::SheetInfo(args) => sheet_info(args),
        Command::TripleVerify {
            case,
            as_printed,
            no_centralizer,
            matrices,
        } => triple_verify(json, case, *as_printed, !no_centralizer, *matrices),
        Command::HitchinDim { genus, sheet } => hitchin_dim(json, *genus, sheet),
        Command::MuS {
            profile,
            levi,
            factors,
            point,
        } => mu_s_cmd(json, profile.as_deref(), levi.as_deref(), factors.as_deref(), point.as_deref()),
        Command::Multiplicity { sheet, z } => multiplicity_cmd(json, sheet, z),
        Command::Realform { label, genus } => realform_cmd(json, label, *genus),
        Command::Fixtures { check, out, .. } => fixtures_cmd(*check, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sheet-atlas: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
