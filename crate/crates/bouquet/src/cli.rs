//! Command-line front end. Every operation is a subcommand; outputs are
//! deterministic (sorted JSON keys, seeds echoed in reports) and exit codes
//! follow one convention:
//!
//!   0  success, or a checked property holds
//!   1  a checked property is false, or an identity fails
//!   2  invalid input
//!   3  a capacity or resource cap was exceeded

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::str::FromStr;

use crate::census;
use crate::cone::{self, ConeError, GoodCone, LtPolytope};
use crate::contact::{self, CatalogId};
use crate::equiv::{self, EquivError};
use crate::join::{self, JoinError, WzFamily};
use crate::lattice::AbelianGroupStructure;
use crate::links::{self, LinkError, SylvesterConvention, WeightedLinkData};
use crate::polygon::{self, PolygonError};
use crate::rational::{format_rational, parse_rational_vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(
    name = "bouquet",
    version,
    about = "Exact toolkit for good moment cones, joins, Sasaki bouquets, weighted links, and circle-bundle topology"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Good cones: goodness, invariants, duals, slices, equivalence.
    #[command(subcommand)]
    Cone(ConeCmd),
    /// Joins of contact manifolds and the five-dimensional families.
    #[command(subcommand)]
    Join(JoinCmd),
    /// Weighted homogeneous hypersurface links.
    #[command(subcommand)]
    Link(LinkCmd),
    /// Polygon spaces.
    #[command(subcommand)]
    Polygon(PolygonCmd),
    /// Circle-bundle cohomology.
    #[command(subcommand)]
    Bundle(BundleCmd),
    /// Numerical verification of catalog structures.
    #[command(subcommand)]
    Check(CheckCmd),
    /// The shipped census of counting results.
    #[command(subcommand)]
    Census(CensusCmd),
}

#[derive(Subcommand, Debug)]
enum ConeCmd {
    /// Test the goodness condition face by face.
    Check { file: String },
    /// Topological invariants: pi_1, rank of pi_2.
    Invariants { file: String },
    /// Minimal generators of the dual cone.
    Dual { file: String },
    /// Vertices of the slice at the hyperplane <y, xi> = 1.
    Slice {
        file: String,
        /// Rational Reeb vector, e.g. 0,0,1 or 1/2,1/3,1.
        #[arg(long)]
        xi: String,
    },
    /// Decide unimodular-plus-permutation equivalence of two cones.
    Equiv {
        file_a: String,
        file_b: String,
        /// Print a verified witness matrix when equivalent.
        #[arg(long)]
        witness: bool,
    },
    /// Lift a labelled polytope to the cone over it.
    FromPolytope { file: String },
}

#[derive(Subcommand, Debug)]
enum JoinCmd {
    /// Moment cone of the sphere join (emits the cone JSON schema).
    Cone {
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
    },
    /// Census facts for the D and tilde-D families.
    Family {
        /// d or tilde.
        #[arg(long = "type")]
        family: String,
        /// Two comma-separated parameters: k1,k2 or l,e.
        #[arg(long)]
        params: String,
    },
    /// Smoothness criterion gcd(v1 k2, v2 k1) = 1.
    Smooth {
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
        #[arg(long, default_value_t = 1)]
        v1: u64,
        #[arg(long, default_value_t = 1)]
        v2: u64,
    },
    /// Pull out the common factor of the join parameters.
    Reduce {
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
    },
    /// Lower bound n1 * n2 on the size of the join's bouquet.
    Bound {
        #[arg(long)]
        n1: u64,
        #[arg(long)]
        n2: u64,
    },
}

#[derive(Subcommand, Debug)]
enum LinkCmd {
    /// Count monomials of weighted degree d.
    H0(LinkData),
    /// Dimension h^0(d) - (n+1) of the transverse complex family.
    Dimj(LinkData),
    /// Dimension of the infinitesimal moduli space.
    Moduli {
        #[command(flatten)]
        data: LinkData,
        #[arg(long = "dim-aut")]
        dim_aut: u64,
    },
    /// At most one weight may violate 2w < d.
    Hypothesis(LinkData),
    /// Weights and degree of a Brieskorn polynomial.
    Brieskorn {
        /// Comma-separated exponents, each at least 2.
        #[arg(long)]
        exponents: String,
    },
    /// The doubly exponential sequence 2, 3, 7, 43, ...
    Sylvester {
        #[arg(long)]
        len: usize,
    },
}

#[derive(Args, Debug)]
struct LinkData {
    /// Comma-separated weights (decimal, arbitrary size).
    #[arg(long)]
    w: String,
    /// Degree (decimal, arbitrary size).
    #[arg(long)]
    d: String,
    /// Override the counting cap on the reduced degree.
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum PolygonCmd {
    /// Genericity of the side lengths (no vanishing signed sum).
    Check {
        /// Comma-separated positive rationals.
        #[arg(long)]
        alpha: String,
    },
    /// Dimension 2(m-3) of the space of m-gons.
    Dim {
        #[arg(long)]
        m: u64,
    },
    /// A floor of the tower of polygon spaces with three torus classes.
    Tower {
        #[arg(long)]
        m: u64,
    },
}

#[derive(Subcommand, Debug)]
enum BundleCmd {
    /// Betti numbers of the circle bundle from base Betti numbers and cup
    /// ranks.
    Gysin {
        /// Even base Betti numbers b0,b2,...,b2q.
        #[arg(long)]
        base: String,
        /// Cup-product ranks r0,...; a prefix when --duality is set.
        #[arg(long)]
        ranks: String,
        /// Complete the rank list by the duality symmetry first.
        #[arg(long)]
        duality: bool,
    },
    /// Complete a cup-rank prefix by duality.
    Ranks {
        #[arg(long)]
        base: String,
        #[arg(long)]
        prefix: String,
    },
    /// Reduce an integral class modulo the Euler class; spin test.
    C1 {
        #[arg(long = "class")]
        class: String,
        #[arg(long)]
        omega: String,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// Run the tensor-identity suite on a catalog structure.
    Structure {
        /// t3, overtwisted-s3, or unit-sphere-bundle.
        #[arg(long)]
        id: String,
        /// Parameter k for the three-dimensional families.
        #[arg(long)]
        k: Option<u32>,
        /// Fibre parameter n for the sphere bundle.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CensusCmd {
    /// Print every shipped record.
    List,
    /// Run the consistency checks on every shipped record.
    Check,
}

/// What a command handler produced: a JSON value plus the verdict when the
/// command checks a property.
struct CmdOutput {
    value: Value,
    verdict: Option<bool>,
}

impl CmdOutput {
    fn data(value: Value) -> Self {
        CmdOutput {
            value,
            verdict: None,
        }
    }

    fn checked(value: Value, verdict: bool) -> Self {
        CmdOutput {
            value,
            verdict: Some(verdict),
        }
    }
}

enum CmdError {
    Invalid(String),
    Capacity(String),
}

impl CmdError {
    fn exit_code(&self) -> i32 {
        match self {
            CmdError::Invalid(_) => 2,
            CmdError::Capacity(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Invalid(m) | CmdError::Capacity(m) => m,
        }
    }
}

impl From<ConeError> for CmdError {
    fn from(e: ConeError) -> Self {
        match e {
            ConeError::CapacityExceeded { .. } => CmdError::Capacity(e.to_string()),
            _ => CmdError::Invalid(e.to_string()),
        }
    }
}

impl From<EquivError> for CmdError {
    fn from(e: EquivError) -> Self {
        match e {
            EquivError::CapacityExceeded { .. } => CmdError::Capacity(e.to_string()),
            EquivError::Cone(inner) => inner.into(),
            _ => CmdError::Invalid(e.to_string()),
        }
    }
}

impl From<JoinError> for CmdError {
    fn from(e: JoinError) -> Self {
        match e {
            JoinError::Cone(inner) => inner.into(),
            _ => CmdError::Invalid(e.to_string()),
        }
    }
}

impl From<LinkError> for CmdError {
    fn from(e: LinkError) -> Self {
        match e {
            LinkError::DegreeCapExceeded { .. } => CmdError::Capacity(e.to_string()),
            _ => CmdError::Invalid(e.to_string()),
        }
    }
}

impl From<PolygonError> for CmdError {
    fn from(e: PolygonError) -> Self {
        match e {
            PolygonError::GenericityCapExceeded { .. } | PolygonError::TowerCapExceeded { .. } => {
                CmdError::Capacity(e.to_string())
            }
            _ => CmdError::Invalid(e.to_string()),
        }
    }
}

impl From<contact::ContactError> for CmdError {
    fn from(e: contact::ContactError) -> Self {
        CmdError::Invalid(e.to_string())
    }
}

/// Result of a full CLI run, ready to print and exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub exit_code: i32,
    pub stdout: String,
}

/// Parses and dispatches; never panics on user input.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return CliOutcome {
                exit_code: code,
                stdout: e.render().to_string(),
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(out) => {
            let exit_code = match out.verdict {
                Some(false) => 1,
                _ => 0,
            };
            CliOutcome {
                exit_code,
                stdout: render(&out.value, format),
            }
        }
        Err(e) => CliOutcome {
            exit_code: e.exit_code(),
            stdout: render(&json!({ "error": e.message() }), format),
        },
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(value).expect("output values serialize")
        ),
        Format::Table => {
            let mut out = String::new();
            render_table(value, 0, &mut out);
            out
        }
    }
}

fn scalar_inline(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.is_empty() => Some("-".to_string()),
        Value::Array(items) => {
            let inline: Option<Vec<String>> = items.iter().map(scalar_inline).collect();
            inline.map(|parts| parts.join(","))
        }
        Value::Object(_) => None,
    }
}

fn render_table(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, val) in map {
                match scalar_inline(val) {
                    Some(inline) => out.push_str(&format!("{pad}{key}: {inline}\n")),
                    None => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_table(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar_inline(item) {
                    Some(inline) => out.push_str(&format!("{pad}- {inline}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_table(item, indent + 1, out);
                    }
                }
            }
        }
        scalar => {
            if let Some(inline) = scalar_inline(scalar) {
                out.push_str(&format!("{pad}{inline}\n"));
            }
        }
    }
}

// -- shared parsing helpers ---------------------------------------------------

fn read_file(path: &str) -> Result<String, CmdError> {
    std::fs::read_to_string(path).map_err(|e| CmdError::Invalid(format!("cannot read {path}: {e}")))
}

fn load_cone(path: &str) -> Result<GoodCone, CmdError> {
    serde_json::from_str(&read_file(path)?).map_err(|e| CmdError::Invalid(format!("{path}: {e}")))
}

fn load_polytope(path: &str) -> Result<LtPolytope, CmdError> {
    serde_json::from_str(&read_file(path)?).map_err(|e| CmdError::Invalid(format!("{path}: {e}")))
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, CmdError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| CmdError::Invalid(format!("bad integer `{x}`")))
        })
        .collect()
}

fn parse_bigint_list(s: &str) -> Result<Vec<BigInt>, CmdError> {
    s.split(',')
        .map(|x| {
            BigInt::from_str(x.trim()).map_err(|_| CmdError::Invalid(format!("bad integer `{x}`")))
        })
        .collect()
}

fn parse_biguint_list(s: &str) -> Result<Vec<BigUint>, CmdError> {
    s.split(',')
        .map(|x| {
            BigUint::from_str(x.trim())
                .map_err(|_| CmdError::Invalid(format!("bad non-negative integer `{x}`")))
        })
        .collect()
}

fn parse_rationals(s: &str) -> Result<Vec<BigRational>, CmdError> {
    parse_rational_vector(s).map_err(|e| CmdError::Invalid(e.to_string()))
}

fn link_data(raw: &LinkData) -> Result<(WeightedLinkData, u64), CmdError> {
    let weights = parse_biguint_list(&raw.w)?;
    let degree = BigUint::from_str(raw.d.trim())
        .map_err(|_| CmdError::Invalid(format!("bad degree `{}`", raw.d)))?;
    let data = WeightedLinkData::new(weights, degree).map_err(CmdError::from)?;
    Ok((data, raw.cap.unwrap_or(links::DEFAULT_H0_DEGREE_CAP)))
}

// -- JSON value builders ------------------------------------------------------

fn bigint_strings(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn bigint_rows(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(rows.iter().map(|r| bigint_strings(r)).collect())
}

fn rational_strings(v: &[BigRational]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| Value::String(format_rational(x)))
            .collect(),
    )
}

fn group_value(g: &AbelianGroupStructure) -> Value {
    json!({
        "free_rank": g.free_rank,
        "invariant_factors": g.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "pretty": g.to_string(),
    })
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

// -- dispatch -----------------------------------------------------------------

fn dispatch(command: Command) -> Result<CmdOutput, CmdError> {
    match command {
        Command::Cone(cmd) => cone_cmd(cmd),
        Command::Join(cmd) => join_cmd(cmd),
        Command::Link(cmd) => link_cmd(cmd),
        Command::Polygon(cmd) => polygon_cmd(cmd),
        Command::Bundle(cmd) => bundle_cmd(cmd),
        Command::Check(cmd) => check_cmd(cmd),
        Command::Census(cmd) => census_cmd(cmd),
    }
}

fn cone_cmd(cmd: ConeCmd) -> Result<CmdOutput, CmdError> {
    match cmd {
        ConeCmd::Check { file } => {
            let cone = load_cone(&file)?;
            let report = cone::check_good(&cone)?;
            Ok(CmdOutput::checked(to_value(&report), report.good))
        }
        ConeCmd::Invariants { file } => {
            let cone = load_cone(&file)?;
            match cone::cone_invariants(&cone) {
                Ok(inv) => Ok(CmdOutput::data(json!({
                    "facet_count": inv.facet_count,
                    "pi1": group_value(&inv.pi1),
                    "pi2_rank": inv.pi2_rank,
                    "odd_betti_vanish": inv.odd_betti_vanish,
                }))),
                // A cone that fails goodness is a negative verdict, not a
                // malformed input.
                Err(e @ (ConeError::NotGood { .. } | ConeError::Pi1NotFinite { .. })) => {
                    Ok(CmdOutput::checked(json!({ "error": e.to_string() }), false))
                }
                Err(e) => Err(e.into()),
            }
        }
        ConeCmd::Dual { file } => {
            let cone = load_cone(&file)?;
            let rays = cone::dual_cone(&cone)?;
            Ok(CmdOutput::data(json!({ "rays": bigint_rows(&rays) })))
        }
        ConeCmd::Slice { file, xi } => {
            let cone = load_cone(&file)?;
            let xi = parse_rationals(&xi)?;
            let slice = cone::reeb_slice(&cone, &xi)?;
            let vertices: Vec<Value> = slice.vertices.iter().map(|v| rational_strings(v)).collect();
            Ok(CmdOutput::data(json!({
                "vertices": vertices,
                "simple": slice.simple,
            })))
        }
        ConeCmd::Equiv {
            file_a,
            file_b,
            witness,
        } => {
            let a = load_cone(&file_a)?;
            let b = load_cone(&file_b)?;
            let eq = equiv::are_equivalent(&a, &b)?;
            let mut value = json!({ "equivalent": eq.equivalent });
            if witness {
                if let Some(l) = &eq.witness {
                    value["witness"] = bigint_rows(&l.row_vecs());
                }
            }
            Ok(CmdOutput::checked(value, eq.equivalent))
        }
        ConeCmd::FromPolytope { file } => {
            let polytope = load_polytope(&file)?;
            let lift = cone::cone_over_polytope(&polytope);
            Ok(CmdOutput::data(json!({
                "cone": {
                    "ambient_rank": lift.ambient_rank,
                    "facet_normals": bigint_rows(&lift.normals),
                },
                "non_primitive_indices": lift.non_primitive,
                "smooth": lift.is_smooth_lift(),
            })))
        }
    }
}

fn join_cmd(cmd: JoinCmd) -> Result<CmdOutput, CmdError> {
    match cmd {
        JoinCmd::Cone { k1, k2 } => {
            let cone = join::sphere_join_cone(k1, k2)?;
            Ok(CmdOutput::data(to_value(&cone)))
        }
        JoinCmd::Family { family, params } => {
            let p = parse_u64_list(&params)?;
            if p.len() != 2 {
                return Err(CmdError::Invalid(
                    "expected exactly two family parameters".into(),
                ));
            }
            let family = match family.as_str() {
                "d" | "D" => WzFamily::D { k1: p[0], k2: p[1] },
                "tilde" | "tildeD" | "tilde-d" => WzFamily::TildeD { l: p[0], e: p[1] },
                other => {
                    return Err(CmdError::Invalid(format!(
                        "unknown family `{other}`; use d or tilde"
                    )))
                }
            };
            let record = join::wz_family(family)?;
            Ok(CmdOutput::data(to_value(&record)))
        }
        JoinCmd::Smooth { k1, k2, v1, v2 } => {
            let spec = join::JoinSpec::new(k1, k2, v1, v2)?;
            let smooth = join::join_smoothness(&spec);
            Ok(CmdOutput::checked(
                json!({
                    "smooth": smooth,
                    "gcd": num_integer::gcd(v1 * k2, v2 * k1),
                }),
                smooth,
            ))
        }
        JoinCmd::Reduce { k1, k2 } => {
            let (m, r1, r2) = join::reduce_common_factor(k1, k2)?;
            Ok(CmdOutput::data(json!({ "m": m, "k1": r1, "k2": r2 })))
        }
        JoinCmd::Bound { n1, n2 } => Ok(CmdOutput::data(json!({
            "lower_bound": join::bouquet_lower_bound(n1, n2),
        }))),
    }
}

fn link_cmd(cmd: LinkCmd) -> Result<CmdOutput, CmdError> {
    match cmd {
        LinkCmd::H0(raw) => {
            let (data, cap) = link_data(&raw)?;
            let h0 = links::h0_count_with_cap(&data, cap)?;
            Ok(CmdOutput::data(json!({ "h0": h0.to_string() })))
        }
        LinkCmd::Dimj(raw) => {
            let (data, _) = link_data(&raw)?;
            let dim = links::dim_transverse_complex_family(&data)?;
            Ok(CmdOutput::data(json!({ "dim_j": dim.to_string() })))
        }
        LinkCmd::Moduli { data: raw, dim_aut } => {
            let (data, _) = link_data(&raw)?;
            let dim = links::dim_moduli(&data, dim_aut)?;
            Ok(CmdOutput::data(json!({
                "dim_moduli": dim.to_string(),
                "dim_aut": dim_aut,
            })))
        }
        LinkCmd::Hypothesis(raw) => {
            let (data, _) = link_data(&raw)?;
            let (holds, violating) = links::whscomp_hypothesis(&data);
            Ok(CmdOutput::checked(
                json!({ "holds": holds, "violating_indices": violating }),
                holds,
            ))
        }
        LinkCmd::Brieskorn { exponents } => {
            let exps = parse_u64_list(&exponents)?;
            let data = links::brieskorn_weights(&exps)?;
            Ok(CmdOutput::data(json!({
                "degree": data.degree().to_string(),
                "weights": data.weights().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            })))
        }
        LinkCmd::Sylvester { len } => {
            let seq = links::sylvester_sequence(len, SylvesterConvention::A)?;
            Ok(CmdOutput::data(json!({
                "sequence": seq.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })))
        }
    }
}

fn polygon_cmd(cmd: PolygonCmd) -> Result<CmdOutput, CmdError> {
    match cmd {
        PolygonCmd::Check { alpha } => {
            let alpha = parse_rationals(&alpha)?;
            let data = polygon::PolygonSpaceData::new(alpha)?;
            let generic = polygon::epsilon_generic(&data)?;
            Ok(CmdOutput::checked(json!({ "generic": generic }), generic))
        }
        PolygonCmd::Dim { m } => {
            let dim = polygon::polygon_dimension(m)?;
            Ok(CmdOutput::data(json!({ "dimension": dim })))
        }
        PolygonCmd::Tower { m } => {
            let floor = polygon::hausmann_tolman_tower(m)?;
            Ok(CmdOutput::data(json!({
                "alpha": floor.data.alpha().iter().map(format_rational).collect::<Vec<_>>(),
                "torus_dims": [floor.torus_dims.0, floor.torus_dims.1, floor.torus_dims.2],
                "generic": true,
            })))
        }
    }
}

fn bundle_cmd(cmd: BundleCmd) -> Result<CmdOutput, CmdError> {
    match cmd {
        BundleCmd::Gysin {
            base,
            ranks,
            duality,
        } => {
            let base = parse_u64_list(&base)?;
            let given = parse_u64_list(&ranks)?;
            let ranks = if duality {
                polygon::duality_complete_ranks(&base, &given)?
            } else {
                given
            };
            let input = polygon::GysinInput::new(base, ranks.clone())?;
            let betti = polygon::gysin_betti(&input);
            Ok(CmdOutput::data(json!({
                "betti": betti,
                "ranks": ranks,
            })))
        }
        BundleCmd::Ranks { base, prefix } => {
            let base = parse_u64_list(&base)?;
            let prefix = parse_u64_list(&prefix)?;
            let ranks = polygon::duality_complete_ranks(&base, &prefix)?;
            Ok(CmdOutput::data(json!({ "ranks": ranks })))
        }
        BundleCmd::C1 { class, omega } => {
            let cls = parse_bigint_list(&class)?;
            let omega = parse_bigint_list(&omega)?;
            let reduced = polygon::quotient_class_reduce(&cls, &omega)?;
            Ok(CmdOutput::data(json!({
                "representative": bigint_strings(&reduced.representative),
                "is_zero_in_quotient": reduced.is_zero_in_quotient,
                "is_even_in_quotient": reduced.is_even_in_quotient,
            })))
        }
    }
}

fn check_cmd(cmd: CheckCmd) -> Result<CmdOutput, CmdError> {
    let CheckCmd::Structure {
        id,
        k,
        n,
        samples,
        tol,
        seed,
    } = cmd;
    let entry = match id.as_str() {
        "t3" => CatalogId::T3 { k: k.unwrap_or(1) },
        "overtwisted-s3" | "overtwisted_s3" => CatalogId::OvertwistedS3 { k: k.unwrap_or(0) },
        "unit-sphere-bundle" | "unit_sphere_bundle" | "sphere" => {
            CatalogId::UnitSphereBundle { n: n.unwrap_or(1) }
        }
        other => {
            return Err(CmdError::Invalid(format!(
                "unknown structure `{other}`; use t3, overtwisted-s3, or unit-sphere-bundle"
            )))
        }
    };
    let report = contact::verify_identities(&entry, samples, seed, tol)?;
    let all_passed = report.all_passed;
    Ok(CmdOutput::checked(to_value(&report), all_passed))
}

fn census_cmd(cmd: CensusCmd) -> Result<CmdOutput, CmdError> {
    let records = census::load_census();
    match cmd {
        CensusCmd::List => Ok(CmdOutput::data(to_value(&records))),
        CensusCmd::Check => {
            let reports = census::check_census(&records);
            let consistent = reports.iter().all(|r| r.consistent);
            Ok(CmdOutput::checked(
                json!({
                    "consistent": consistent,
                    "reports": to_value(&reports),
                }),
                consistent,
            ))
        }
    }
}
