//! JSON front end for the `pseudohiggs` binary.
//!
//! Every command reads one JSON document and prints one JSON document with
//! a `result` (or `error`) and an `audit` block. Exit codes: 0 success,
//! 1 domain error, 2 malformed input or arguments.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::cohomology::{
    are_cohomologous, central_extension, h2_classes, zeta, Cochain2, CohomologyError,
    FiniteAbelianGroup, ScaleBounds,
};
use crate::lie::{
    alcove_normalize, check_alcove_form, isotropy_eigenspaces, parabolic_from_s, GroupModel,
    LieError,
};
use crate::local::{ascend, check_invariance, descend, residue_report, GradedSeries, LocalError};
use crate::moduli::{
    degree_pairing, degree_scaling_check, enumerate_strata, riemann_hurwitz, stability_verdict,
    CoveringData, FlagDegreeData, ModuliError, StabilityMode,
};
use crate::pseudorep::{
    classify, deck_transport, enumerate_classes, project_mod_center, verify_pseudorep,
    CyclotomicMatrix, MatrixModel, PseudoRep, PseudoRepClass, PseudoRepError,
};
use crate::scalars::{lcm_denominators, root_of_unity_rational, Rational, ScalarError};

mod corpus;

pub use corpus::{run_corpus, CorpusCase};

/// Environment variable overriding the brute-force search bound
/// (`m^{|Γ|-1}` normalized functions).
pub const MAX_SEARCH_ENV: &str = "PSEUDOHIGGS_MAX_SEARCH";

#[derive(Debug, Parser)]
#[command(
    name = "pseudohiggs",
    version,
    about = "Exact algebra for equivariant Higgs bundles"
)]
struct Cli {
    #[command(subcommand)]
    group: Group,
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Override the brute-force search bound.
    #[arg(long, global = true)]
    max_search: Option<u64>,
    /// Largest group order for brute-force searches.
    #[arg(long, global = true)]
    max_group_order: Option<u64>,
    /// Largest coefficient group order for brute-force searches.
    #[arg(long, global = true)]
    max_coeff_order: Option<u64>,
    /// Working cyclotomic order for printed roots of unity.
    #[arg(long, global = true)]
    order: Option<u64>,
    /// Character twist `e^{2πi·t}` for `local check`.
    #[arg(long, global = true)]
    twist: Option<Rational>,
}

#[derive(Debug, Subcommand)]
enum Group {
    /// 2-cocycles, H², central extensions and ζ(γ)
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Pseudorepresentations of cyclic isotropy groups
    #[command(subcommand)]
    Pseudorep(PseudorepCmd),
    /// Alcove weights, isotropy eigenspaces and parabolic data
    #[command(subcommand)]
    Lie(LieCmd),
    /// Local invariance, descent and ascent of graded series
    #[command(subcommand)]
    Local(LocalCmd),
    /// Covering genus, strata, degrees and stability
    #[command(subcommand)]
    Moduli(ModuliCmd),
    /// Golden corpus replay
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Debug, Args)]
struct Input {
    /// JSON input file, or `-` for stdin.
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum CocycleCmd {
    /// Cocycle identity check, optionally against a second cochain
    Verify(Input),
    /// Representatives of H²(Γ, ℤ/m)
    H2(Input),
    /// Central extension and isomorphism comparison
    Extend(Input),
    /// ζ(γ) as a product of cocycle values
    Zeta(Input),
}

#[derive(Debug, Subcommand)]
enum PseudorepCmd {
    /// Exhaustive check of the pseudorepresentation relation
    Verify(Input),
    /// Eigenvalue class of a pseudorepresentation
    Classify(Input),
    /// All classes with a given σ(γ)ⁿ
    Enumerate(Input),
    /// Transport along a deck transformation
    Transport(Input),
    /// Projection modulo the central subgroup
    Project(Input),
}

#[derive(Debug, Subcommand)]
enum LieCmd {
    /// Alcove representative of a torus element
    Alcove(Input),
    /// β-eigenspaces of Ad(e^{2πiα}) on 𝔪
    Eigenspaces(Input),
    /// Parabolic and Levi masks for a rational s
    Parabolic(Input),
}

#[derive(Debug, Subcommand)]
enum LocalCmd {
    /// Invariance of an upstairs series
    Check(Input),
    /// Descend an invariant series through the gauge
    Descend(Input),
    /// Ascend a downstairs series
    Ascend(Input),
    /// Residue report of a downstairs series
    Residue(Input),
}

#[derive(Debug, Subcommand)]
enum ModuliCmd {
    /// Genus of the quotient curve
    Rh(Input),
    /// Stratum indices of the fixed locus
    Strata(Input),
    /// Degree pairing of a reduction
    Degree(Input),
    /// Stability relative to candidate reductions
    Stability(Input),
    /// Degree scaling under the cover
    Scale(Input),
}

#[derive(Debug, Subcommand)]
enum CorpusCmd {
    /// Replay every case in a directory against its recorded output.
    Run {
        dir: PathBuf,
        /// Rewrite the recorded outputs instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

/// Exit code and the text destined for stdout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Debug)]
enum CliError {
    Malformed(String),
    Domain { code: &'static str, detail: String },
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain { code: e.code(), detail: e.to_string() }
            }
        }
    )*};
}
domain_from!(
    ScalarError,
    CohomologyError,
    PseudoRepError,
    LieError,
    LocalError,
    ModuliError
);

/// Parameters echoed in the audit block.
struct Audit {
    fields: Map<String, Value>,
}

impl Audit {
    fn new(command: &str, bounds: &ScaleBounds) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), json!(command));
        fields.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        fields.insert(
            "bounds".into(),
            serde_json::to_value(bounds).expect("bounds serialize"),
        );
        Audit { fields }
    }

    fn set(&mut self, key: &str, value: impl Serialize) {
        self.fields.insert(
            key.into(),
            serde_json::to_value(value).expect("audit values serialize"),
        );
    }
}

struct Context {
    bounds: ScaleBounds,
    order: Option<u64>,
    twist: Option<Rational>,
    input_override: Option<String>,
}

impl Context {
    fn read<T: DeserializeOwned>(&self, input: &Input) -> Result<T, CliError> {
        let text = match &self.input_override {
            Some(t) => t.clone(),
            None => read_source(&input.input)?,
        };
        serde_json::from_str(&text)
            .map_err(|e| CliError::Malformed(format!("input does not match the schema: {e}")))
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::Malformed(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))
    }
}

fn to_json(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values render");
    s.push('\n');
    s
}

fn malformed(detail: impl Into<String>) -> Outcome {
    Outcome {
        code: 2,
        stdout: render(&json!({"error": "MalformedInput", "detail": detail.into()})),
    }
}

/// Scale bounds from defaults, then the environment, then flags.
fn resolve_bounds(cli: &Cli, env_max_search: Option<&str>) -> Result<ScaleBounds, String> {
    let mut b = ScaleBounds::default();
    if let Some(v) = env_max_search {
        b.max_search = v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_SEARCH_ENV} must be a non-negative integer, got {v:?}"))?;
    }
    if let Some(v) = cli.max_search {
        b.max_search = v;
    }
    if let Some(v) = cli.max_group_order {
        b.max_group_order = v;
    }
    if let Some(v) = cli.max_coeff_order {
        b.max_coeff_order = v;
    }
    Ok(b)
}

/// Runs the command line `args` (program name first), reading the scale
/// override from the process environment.
pub fn run(args: &[String]) -> Outcome {
    let env = std::env::var(MAX_SEARCH_ENV).ok();
    run_with(args, env.as_deref(), None)
}

/// As [`run`], with the environment value and optionally the input text
/// supplied directly (the input path argument is then ignored).
pub fn run_with(args: &[String], env_max_search: Option<&str>, input: Option<String>) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                },
                _ => malformed(e.to_string()),
            };
        }
    };
    let bounds = match resolve_bounds(&cli, env_max_search) {
        Ok(b) => b,
        Err(msg) => return malformed(msg),
    };
    if let Group::Corpus(CorpusCmd::Run { dir, bless }) = &cli.group {
        return run_corpus(dir, *bless, env_max_search);
    }
    let (name, takes_order, takes_twist) = command_info(&cli.group);
    if cli.order.is_some() && !takes_order {
        return malformed(format!("--order does not apply to `{name}`"));
    }
    if cli.twist.is_some() && !takes_twist {
        return malformed(format!("--twist does not apply to `{name}`"));
    }
    let ctx = Context {
        bounds: bounds.clone(),
        order: cli.order,
        twist: cli.twist.clone(),
        input_override: input,
    };
    let mut audit = Audit::new(name, &bounds);
    let outcome = match dispatch(&cli.group, &ctx, &mut audit) {
        Ok(result) => Outcome {
            code: 0,
            stdout: render(&json!({"result": result, "audit": Value::Object(audit.fields)})),
        },
        Err(CliError::Domain { code, detail }) => Outcome {
            code: 1,
            stdout: render(
                &json!({"error": code, "detail": detail, "audit": Value::Object(audit.fields)}),
            ),
        },
        Err(CliError::Malformed(detail)) => malformed(detail),
    };
    match &cli.output {
        Some(path) if outcome.code != 2 => match std::fs::write(path, &outcome.stdout) {
            Ok(()) => Outcome {
                code: outcome.code,
                stdout: String::new(),
            },
            Err(e) => malformed(format!("cannot write {}: {e}", path.display())),
        },
        _ => outcome,
    }
}

fn command_info(g: &Group) -> (&'static str, bool, bool) {
    match g {
        Group::Cocycle(c) => match c {
            CocycleCmd::Verify(_) => ("cocycle verify", false, false),
            CocycleCmd::H2(_) => ("cocycle h2", false, false),
            CocycleCmd::Extend(_) => ("cocycle extend", false, false),
            CocycleCmd::Zeta(_) => ("cocycle zeta", true, false),
        },
        Group::Pseudorep(c) => match c {
            PseudorepCmd::Verify(_) => ("pseudorep verify", false, false),
            PseudorepCmd::Classify(_) => ("pseudorep classify", true, false),
            PseudorepCmd::Enumerate(_) => ("pseudorep enumerate", false, false),
            PseudorepCmd::Transport(_) => ("pseudorep transport", false, false),
            PseudorepCmd::Project(_) => ("pseudorep project", false, false),
        },
        Group::Lie(c) => match c {
            LieCmd::Alcove(_) => ("lie alcove", false, false),
            LieCmd::Eigenspaces(_) => ("lie eigenspaces", false, false),
            LieCmd::Parabolic(_) => ("lie parabolic", false, false),
        },
        Group::Local(c) => match c {
            LocalCmd::Check(_) => ("local check", false, true),
            LocalCmd::Descend(_) => ("local descend", false, false),
            LocalCmd::Ascend(_) => ("local ascend", false, false),
            LocalCmd::Residue(_) => ("local residue", false, false),
        },
        Group::Moduli(c) => match c {
            ModuliCmd::Rh(_) => ("moduli rh", false, false),
            ModuliCmd::Strata(_) => ("moduli strata", false, false),
            ModuliCmd::Degree(_) => ("moduli degree", false, false),
            ModuliCmd::Stability(_) => ("moduli stability", false, false),
            ModuliCmd::Scale(_) => ("moduli scale", false, false),
        },
        Group::Corpus(_) => ("corpus run", false, false),
    }
}

fn dispatch(g: &Group, ctx: &Context, audit: &mut Audit) -> Result<Value, CliError> {
    match g {
        Group::Cocycle(c) => cocycle_cmd(c, ctx, audit),
        Group::Pseudorep(c) => pseudorep_cmd(c, ctx, audit),
        Group::Lie(c) => lie_cmd(c, ctx, audit),
        Group::Local(c) => local_cmd(c, ctx, audit),
        Group::Moduli(c) => moduli_cmd(c, ctx, audit),
        Group::Corpus(_) => unreachable!("handled before dispatch"),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CocycleInput {
    cocycle: Cochain2,
    #[serde(default)]
    compare: Option<Cochain2>,
    #[serde(default)]
    element: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct H2Input {
    group: FiniteAbelianGroup,
    coeff_order: u64,
}

fn audit_cochain(audit: &mut Audit, c: &Cochain2) {
    audit.set("group", c.group());
    audit.set("m", c.coeff_order());
    audit.set("M", c.coeff_order());
}

fn cocycle_cmd(c: &CocycleCmd, ctx: &Context, audit: &mut Audit) -> Result<Value, CliError> {
    match c {
        CocycleCmd::Verify(i) => {
            let inp: CocycleInput = ctx.read(i)?;
            audit_cochain(audit, &inp.cocycle);
            let witness = inp.cocycle.cocycle_witness();
            Ok(json!({"is_cocycle": witness.is_none(), "witness": witness}))
        }
        CocycleCmd::H2(i) => {
            let inp: H2Input = ctx.read(i)?;
            audit.set("group", &inp.group);
            audit.set("m", inp.coeff_order);
            let reps = h2_classes(&inp.group, inp.coeff_order, &ctx.bounds)?;
            Ok(json!({"classes": reps.len(), "representatives": reps}))
        }
        CocycleCmd::Extend(i) => {
            let inp: CocycleInput = ctx.read(i)?;
            audit_cochain(audit, &inp.cocycle);
            let g = central_extension(&inp.cocycle)?;
            let mut out = json!({
                "order": g.order(),
                "is_group": g.is_group(),
                "abelian": g.is_abelian(),
                "kernel_central": g.kernel_is_central(),
                "projects_onto_base": g.projects_onto_base(),
                "order_profile": g.order_profile(),
            });
            if let Some(other) = &inp.compare {
                let h = central_extension(other).map_err(|e| match e {
                    CohomologyError::NotACocycle { triple, .. } => {
                        CliError::from(CohomologyError::NotACocycle { which: 1, triple })
                    }
                    e => e.into(),
                })?;
                let witness = are_cohomologous(&inp.cocycle, other, &ctx.bounds)?;
                out["compare"] = json!({
                    "cohomologous": witness.is_some(),
                    "witness": witness,
                    "isomorphic": g.is_isomorphic(&h),
                });
            }
            Ok(out)
        }
        CocycleCmd::Zeta(i) => {
            let inp: CocycleInput = ctx.read(i)?;
            audit_cochain(audit, &inp.cocycle);
            let gamma = inp
                .element
                .ok_or_else(|| CliError::Malformed("missing field `element`".into()))?;
            if gamma >= inp.cocycle.group().order() {
                return Err(CliError::Malformed(format!(
                    "element {gamma} outside the group"
                )));
            }
            let m = inp.cocycle.coeff_order();
            let order = ctx.order.unwrap_or(m);
            audit.set("M", order);
            let k = zeta(&inp.cocycle, gamma);
            let exponent = Rational::new(k as i64, m as i64);
            let value = root_of_unity_rational(&exponent, order)?;
            Ok(json!({"element": gamma, "exponent": k, "zeta": exponent, "value": value}))
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PseudoRepInput {
    Full {
        pseudorep: PseudoRep,
    },
    Generator {
        cocycle: Cochain2,
        generator_image: CyclotomicMatrix,
    },
}

impl PseudoRepInput {
    fn build(self) -> Result<PseudoRep, CliError> {
        match self {
            PseudoRepInput::Full { pseudorep } => Ok(pseudorep),
            PseudoRepInput::Generator {
                cocycle,
                generator_image,
            } => Ok(PseudoRep::from_generator(cocycle, generator_image)?),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EnumerateInput {
    n: u64,
    r: usize,
    zeta: Rational,
    model: MatrixModel,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TransportInput {
    pseudorep: PseudoRep,
    ambient: FiniteAbelianGroup,
    generator: usize,
    gamma0: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProjectInput {
    class: PseudoRepClass,
    center_order: u64,
}

fn audit_pseudorep(audit: &mut Audit, p: &PseudoRep) {
    audit.set("n", p.order());
    audit.set("r", p.rank());
    audit.set("m", p.cocycle().coeff_order());
    audit.set("convention", "zero_one");
}

fn pseudorep_cmd(c: &PseudorepCmd, ctx: &Context, audit: &mut Audit) -> Result<Value, CliError> {
    match c {
        PseudorepCmd::Verify(i) => {
            let p = ctx.read::<PseudoRepInput>(i)?.build()?;
            audit_pseudorep(audit, &p);
            Ok(json!({"check": verify_pseudorep(&p)}))
        }
        PseudorepCmd::Classify(i) => {
            let p = ctx.read::<PseudoRepInput>(i)?.build()?;
            audit_pseudorep(audit, &p);
            let cls = classify(&p)?;
            let needed = lcm_denominators(&cls.exponents);
            let order = ctx.order.unwrap_or(needed);
            audit.set("M", order);
            let eigenvalues = cls
                .exponents
                .iter()
                .map(|q| root_of_unity_rational(q, order))
                .collect::<Result<Vec<_>, _>>()?;
            let alcove = alcove_normalize(GroupModel::ComplexGl(cls.rank()), &cls.exponents)?;
            Ok(json!({"class": cls, "eigenvalues": eigenvalues, "alcove": alcove.entries}))
        }
        PseudorepCmd::Enumerate(i) => {
            let inp: EnumerateInput = ctx.read(i)?;
            audit.set("n", inp.n);
            audit.set("r", inp.r);
            audit.set("zeta", &inp.zeta);
            audit.set("convention", "zero_one");
            let classes = enumerate_classes(inp.n, inp.r, &inp.zeta, inp.model)?;
            Ok(json!({"count": classes.len(), "classes": classes}))
        }
        PseudorepCmd::Transport(i) => {
            let inp: TransportInput = ctx.read(i)?;
            audit_pseudorep(audit, &inp.pseudorep);
            audit.set("ambient", &inp.ambient);
            let t = deck_transport(&inp.pseudorep, inp.generator, inp.gamma0, &inp.ambient)?;
            let same_class = match (classify(&inp.pseudorep), classify(&t.pseudorep)) {
                (Ok(a), Ok(b)) => Some(a == b),
                _ => None,
            };
            Ok(
                json!({"transported": t.pseudorep, "generator": t.generator, "same_class": same_class}),
            )
        }
        PseudorepCmd::Project(i) => {
            let inp: ProjectInput = ctx.read(i)?;
            audit.set("n", inp.class.order);
            audit.set("m", inp.center_order);
            audit.set("convention", "zero_one");
            if inp.center_order == 0 {
                return Err(CliError::Malformed("center_order must be positive".into()));
            }
            Ok(to_json(project_mod_center(&inp.class, inp.center_order)))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlcoveInput {
    model: GroupModel,
    exponents: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightInput {
    model: GroupModel,
    alpha: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParabolicInput {
    model: GroupModel,
    s: Vec<Rational>,
}

fn lie_cmd(c: &LieCmd, ctx: &Context, audit: &mut Audit) -> Result<Value, CliError> {
    match c {
        LieCmd::Alcove(i) => {
            let inp: AlcoveInput = ctx.read(i)?;
            audit.set("model", inp.model);
            let w = alcove_normalize(inp.model, &inp.exponents)?;
            audit.set("convention", w.convention());
            audit.set("M", w.order());
            Ok(
                json!({"alpha": w.entries, "shift": w.shift, "interior": w.is_interior(), "order": w.order()}),
            )
        }
        LieCmd::Eigenspaces(i) => {
            let inp: WeightInput = ctx.read(i)?;
            audit.set("model", inp.model);
            audit.set("alpha", &inp.alpha);
            audit.set("convention", "signed");
            let w = check_alcove_form(inp.model, &inp.alpha)?;
            audit.set("M", w.order());
            let spaces = isotropy_eigenspaces(&w)?;
            Ok(
                json!({"eigenspaces": spaces, "dim_m": inp.model.dim_m(), "interior": w.is_interior()}),
            )
        }
        LieCmd::Parabolic(i) => {
            let inp: ParabolicInput = ctx.read(i)?;
            audit.set("model", inp.model);
            audit.set("s", &inp.s);
            let d = parabolic_from_s(inp.model, &inp.s)?;
            let [p, l, m_s, m0_s] = d.dims();
            let failures = d.verify();
            Ok(json!({
                "p": d.p, "l": d.l, "m_s": d.m_s, "m0_s": d.m0_s,
                "dims": {"p": p, "l": l, "m_s": m_s, "m0_s": m0_s},
                "verified": failures.is_empty(),
                "failures": failures,
            }))
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SeriesInput {
    Wrapped { series: GradedSeries },
    Bare(GradedSeries),
}

impl SeriesInput {
    fn into_series(self) -> GradedSeries {
        match self {
            SeriesInput::Wrapped { series } | SeriesInput::Bare(series) => series,
        }
    }
}

fn audit_series(audit: &mut Audit, s: &GradedSeries) {
    audit.set("N", s.n());
    audit.set("alpha", s.alpha());
    audit.set("model", s.model());
    audit.set("trunc", s.trunc());
    audit.set(
        "M",
        lcm_denominators(s.alpha().iter().chain([&Rational::new(1, s.n() as i64)])),
    );
    audit.set("convention", "signed");
}

fn local_cmd(c: &LocalCmd, ctx: &Context, audit: &mut Audit) -> Result<Value, CliError> {
    let input = match c {
        LocalCmd::Check(i) | LocalCmd::Descend(i) | LocalCmd::Ascend(i) | LocalCmd::Residue(i) => i,
    };
    let series = ctx.read::<SeriesInput>(input)?.into_series();
    audit_series(audit, &series);
    match c {
        LocalCmd::Check(_) => {
            if let Some(t) = &ctx.twist {
                audit.set("twist", t);
            }
            Ok(to_json(check_invariance(&series, ctx.twist.as_ref())?))
        }
        LocalCmd::Descend(_) => {
            let (down, report) = descend(&series)?;
            Ok(json!({"series": down, "residue": report}))
        }
        LocalCmd::Ascend(_) => Ok(json!({"series": ascend(&series)?})),
        LocalCmd::Residue(_) => Ok(to_json(residue_report(&series)?)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StrataInput {
    covering: CoveringData,
    center_order: u64,
    model: GroupModel,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StabilityInput {
    candidates: Vec<FlagDegreeData>,
    mode: StabilityMode,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScaleInput {
    par_deg_y: Rational,
    #[serde(rename = "N")]
    n: u64,
    claimed_deg_x: Rational,
}

fn moduli_cmd(c: &ModuliCmd, ctx: &Context, audit: &mut Audit) -> Result<Value, CliError> {
    match c {
        ModuliCmd::Rh(i) => {
            let d: CoveringData = ctx.read(i)?;
            audit.set("N", d.group_order);
            Ok(to_json(riemann_hurwitz(&d)?))
        }
        ModuliCmd::Strata(i) => {
            let inp: StrataInput = ctx.read(i)?;
            audit.set("N", inp.covering.group_order);
            audit.set("m", inp.center_order);
            audit.set("model", inp.model);
            audit.set("convention", "zero_one");
            Ok(to_json(enumerate_strata(
                &inp.covering,
                inp.center_order,
                inp.model,
                &ctx.bounds,
            )?))
        }
        ModuliCmd::Degree(i) => {
            let f: FlagDegreeData = ctx.read(i)?;
            audit.set("s", &f.s);
            Ok(json!({"pairing": degree_pairing(&f)?}))
        }
        ModuliCmd::Stability(i) => {
            let inp: StabilityInput = ctx.read(i)?;
            audit.set("mode", inp.mode);
            Ok(to_json(stability_verdict(&inp.candidates, inp.mode)?))
        }
        ModuliCmd::Scale(i) => {
            let inp: ScaleInput = ctx.read(i)?;
            audit.set("N", inp.n);
            Ok(to_json(degree_scaling_check(
                &inp.par_deg_y,
                inp.n,
                &inp.claimed_deg_x,
            )?))
        }
    }
}
