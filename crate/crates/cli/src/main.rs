use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopf_trace::action::{module_object_hom, module_object_hom_basis, ModuleCategoryObject};
use hopf_trace::comodule::{comodule_hom_basis, Comodule};
use hopf_trace::linalg::{Field, LinearMap};
use hopf_trace::suite::{self, Execution, Suite};
use hopf_trace::trace::{
    balancing, check_hopf_bimodule, hom_hopf_bimodule_basis, induce, yd_induction, HopfBimodule,
};
use hopf_trace_cli::definition::{
    self, balancing_def, bicomodule_algebra_def, comodule_def, hopf_bimodule_def, hopf_def, module_object_def,
    DefinitionFile, FieldSpec, Registry,
};
use hopf_trace_cli::input::{self, parse_field, FIELD_ENV};
use hopf_trace_cli::render;

const USAGE: u8 = 2;
const FAILED: u8 = 1;

#[derive(Parser)]
#[command(name = "hopftrace", version, about = "Exact checks for Hopf algebras, comodule categories and their traces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Hopf,
    Comodule,
    Coend,
    Balancing,
    Center,
    Yd,
    All,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::Hopf => Suite::Hopf,
            SuiteArg::Comodule => Suite::Comodule,
            SuiteArg::Coend => Suite::Coend,
            SuiteArg::Balancing => Suite::Balancing,
            SuiteArg::Center => Suite::Center,
            SuiteArg::Yd => Suite::Yd,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over a Hopf algebra and its test family.
    Verify {
        /// `zoo:<entry>` or a definition file.
        input: String,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Field for zoo inputs.
        #[arg(long, env = FIELD_ENV, default_value = "rational")]
        field: String,
        /// Run checks on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Print the dimension of a Hom space between two named objects.
    Hom {
        input: String,
        /// Comodule, module object or Hopf bimodule name. `yd:<comodule>`
        /// names the induced module object `X⊗Ĥ`, `induce:<module>` the
        /// Hopf bimodule `H̃⊗M`.
        a: String,
        b: String,
        /// Also print a basis as sparse `[row, column, scalar]` triples.
        #[arg(long)]
        basis: bool,
        #[arg(long, env = FIELD_ENV, default_value = "rational")]
        field: String,
    },
    /// Emit `H̃⊗M` with its balancings as a definition file.
    Trace {
        input: String,
        /// Bicomodule algebra `B` (`trivial`, `hat`, `coend` or a declared name).
        #[arg(long)]
        algebra: String,
        /// Module object over `B`.
        #[arg(long)]
        module: String,
        #[arg(long, env = FIELD_ENV, default_value = "rational")]
        field: String,
        #[arg(long, short)]
        output: Option<String>,
    },
    /// Re-render a JSON report written by `verify --format json`.
    Report {
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a zoo entry or a definition file in canonical form.
    Export {
        input: String,
        #[arg(long, env = FIELD_ENV, default_value = "rational")]
        field: String,
        #[arg(long, short)]
        output: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { input, suite, format, field, serial } => verify(&input, suite.suite(), format, &field, serial),
        Command::Hom { input, a, b, basis, field } => hom(&input, &a, &b, basis, &field),
        Command::Trace { input, algebra, module, field, output } => trace(&input, &algebra, &module, &field, output),
        Command::Report { file, format } => report(&file, format),
        Command::Export { input, field, output } => export(&input, &field, output),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("hopftrace: {message}");
            ExitCode::from(code)
        }
    }
}

type Outcome = Result<u8, (u8, String)>;

fn usage(message: impl Into<String>) -> (u8, String) {
    (USAGE, message.into())
}

fn field(text: &str) -> Result<Field, (u8, String)> {
    parse_field(text).map_err(usage)
}

fn emit(text: &str, output: Option<String>) -> Result<(), (u8, String)> {
    match output {
        Some(path) => fs::write(&path, text).map_err(|e| usage(format!("{path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(input: &str, suite: Suite, format: Format, field_text: &str, serial: bool) -> Outcome {
    let loaded = input::resolve(input, field(field_text)?).map_err(usage)?.loaded;
    let exec = if serial { Execution::Serial } else { Execution::Parallel };
    let report = suite::run(&loaded.subject, suite, exec);
    match format {
        Format::Text => print!("{}", render::text(&report)),
        Format::Json => print!("{}", render::json(&report)),
    }
    Ok(if report.passed() { 0 } else { FAILED })
}

fn registry(loaded: &definition::Loaded) -> Result<&Registry, (u8, String)> {
    loaded
        .registry
        .as_ref()
        .ok_or_else(|| (FAILED, "the structure maps do not satisfy the Hopf algebra axioms".to_string()))
}

enum Object {
    Comodule(Comodule),
    Module(ModuleCategoryObject),
    Bimodule(HopfBimodule),
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Comodule(_) => "comodule",
            Object::Module(_) => "module object",
            Object::Bimodule(_) => "Hopf bimodule",
        }
    }
}

fn lookup(reg: &Registry, name: &str) -> Result<Object, (u8, String)> {
    let unknown = |n: &str| usage(format!("no object named {n:?}"));
    if let Some(x) = name.strip_prefix("yd:") {
        let x = reg.comodule(x).ok_or_else(|| unknown(x))?;
        return yd_induction(x).map(Object::Module).map_err(|e| usage(e.to_string()));
    }
    if let Some(m) = name.strip_prefix("induce:") {
        let m = reg.module(m).ok_or_else(|| unknown(m))?;
        return induce(m).map(Object::Bimodule).map_err(|e| usage(e.to_string()));
    }
    if let Some(x) = reg.comodule(name) {
        return Ok(Object::Comodule(x.clone()));
    }
    if let Some(m) = reg.module(name) {
        return Ok(Object::Module(m.clone()));
    }
    if let Some(n) = reg.bimodule(name) {
        return Ok(Object::Bimodule(n.clone()));
    }
    Err(unknown(name))
}

fn hom(input: &str, a: &str, b: &str, with_basis: bool, field_text: &str) -> Outcome {
    let loaded = input::resolve(input, field(field_text)?).map_err(usage)?.loaded;
    let reg = registry(&loaded)?;
    let (x, y) = (lookup(reg, a)?, lookup(reg, b)?);
    let basis: Vec<LinearMap> = match (&x, &y) {
        (Object::Comodule(x), Object::Comodule(y)) => comodule_hom_basis(x, y),
        (Object::Module(x), Object::Module(y)) if !with_basis => {
            let dim = module_object_hom(x, y).map_err(|e| usage(e.to_string()))?.dim();
            println!("{dim}");
            return Ok(0);
        }
        (Object::Module(x), Object::Module(y)) => module_object_hom_basis(x, y),
        (Object::Bimodule(x), Object::Bimodule(y)) => hom_hopf_bimodule_basis(x, y),
        _ => return Err(usage(format!("cannot compare a {} with a {}", x.kind(), y.kind()))),
    }
    .map_err(|e| usage(e.to_string()))?;
    println!("{}", basis.len());
    if with_basis {
        for f in &basis {
            let triples: Vec<serde_json::Value> = f
                .entries()
                .map(|(r, c, s)| serde_json::json!([r, c, s.to_string()]))
                .collect();
            println!("{}", serde_json::Value::Array(triples));
        }
    }
    Ok(0)
}

fn trace(input: &str, algebra: &str, module: &str, field_text: &str, output: Option<String>) -> Outcome {
    let resolved = input::resolve(input, field(field_text)?).map_err(usage)?;
    let loaded = &resolved.loaded;
    let reg = registry(loaded)?;
    let b = reg.algebra(algebra).ok_or_else(|| usage(format!("no bicomodule algebra named {algebra:?}")))?;
    let m = reg.module(module).ok_or_else(|| usage(format!("no module object named {module:?}")))?;
    if !m.algebra().same(b) {
        return Err(usage(format!("{module:?} is not a module object over {:?}", b.name())));
    }
    let n = induce(m).map_err(|e| (FAILED, e.to_string()))?;
    let checks = check_hopf_bimodule(&n);
    if !checks.passed() {
        return Err((FAILED, format!("induced object fails: {}", checks.failed_ids().join(", "))));
    }
    let mut balancings = Vec::new();
    for x in &reg.comodules {
        let w = balancing(m, x).map_err(|e| (FAILED, e.to_string()))?;
        balancings.push(balancing_def(m.name(), x.name(), &w.beta));
    }
    let subject = &loaded.subject;
    let declared = resolved.file.as_ref();
    let h = subject.hopf.as_ref().expect("registry implies a Hopf algebra");
    let mut file = DefinitionFile {
        field: FieldSpec::of(h.field()),
        hopf_algebra: hopf_def(&subject.name, &subject.data, loaded.basis.clone()),
        comodules: subject.extras.comodules.iter().map(comodule_def).collect(),
        bicomodule_algebras: subject.extras.algebras.iter().map(bicomodule_algebra_def).collect(),
        module_objects: Vec::new(),
        hopf_bimodules: vec![hopf_bimodule_def(&n)],
        balancings,
    };
    if declared.is_some() {
        file.module_objects = subject.extras.modules.iter().map(module_object_def).collect();
    }
    emit(&definition::to_text(&file), output)?;
    Ok(0)
}

fn report(path: &str, format: Format) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
    let report = render::from_json(&text).map_err(|e| usage(format!("{path}: {e}")))?;
    match format {
        Format::Text => print!("{}", render::text(&report)),
        Format::Json => print!("{}", render::json(&report)),
    }
    Ok(if report.passed() { 0 } else { FAILED })
}

fn export(input: &str, field_text: &str, output: Option<String>) -> Outcome {
    let file = if input.starts_with("zoo:") {
        let resolved = input::resolve(input, field(field_text)?).map_err(usage)?;
        let s = &resolved.loaded.subject;
        DefinitionFile {
            field: FieldSpec::of(s.data.field()),
            hopf_algebra: hopf_def(&s.name, &s.data, resolved.loaded.basis.clone()),
            comodules: Vec::new(),
            bicomodule_algebras: Vec::new(),
            module_objects: Vec::new(),
            hopf_bimodules: Vec::new(),
            balancings: Vec::new(),
        }
    } else {
        let file = input::read_file(input).map_err(usage)?;
        definition::canonicalize(&file).map_err(|e| usage(format!("{input}: {e}")))?
    };
    emit(&definition::to_text(&file), output)?;
    Ok(0)
}
