mod args;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use segscore::harness::{
    emit_report, evaluate_dataset, evaluate_pair, generate_fixture, load_label_map, load_manifest, perturbation_sweep,
    save_label_map, EvalOptions, FixtureSpec, ImageFormat, SweepKind,
};
use segscore::{Error, Selector};

use args::{Cli, Command, FixtureSet, Format, MetricArgs, SweepSet};

const THREADS_VAR: &str = "SEGSCORE_THREADS";

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Run(e) if e.is_io() => 2,
            Failure::Run(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Run(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("{THREADS_VAR} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Usage(e.to_string()))
}

fn options(m: &MetricArgs) -> EvalOptions {
    EvalOptions {
        selector: m.foreground.map_or(Selector::AnyNonzero, Selector::Label),
        split_components: m.split_components,
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Eval(a) => {
            let pred = load_label_map(&a.pred, None)?;
            let gts = a.gt.iter().map(|p| load_label_map(p, None)).collect::<Result<Vec<_>, _>>()?;
            let report = evaluate_pair(&pred, &gts, &a.metrics.metrics, &options(&a.metrics))?;
            emit_report(&report, a.output.format.into(), a.output.out.as_deref())?;
        }
        Command::Dataset(a) => {
            let ds = load_manifest(&a.manifest)?;
            let report = evaluate_dataset(&ds, &a.metrics.metrics, &options(&a.metrics))?;
            emit_report(&report, a.output.format.into(), a.output.out.as_deref())?;
        }
        Command::Fixtures(a) => write_fixtures(&a.out, a.which, &a.angles, a.image_format.into())?,
        Command::Sweep(a) => {
            let (base, kind) = match a.which {
                SweepSet::Rotation => (FixtureSpec::rotation_base(), SweepKind::Rotation),
                SweepSet::Translation => (FixtureSpec::translation_base(), SweepKind::Translation),
            };
            let result = perturbation_sweep(&base, kind, &a.steps, &a.metrics, &EvalOptions::default())?;
            let bytes = match a.output.format {
                Format::Json => {
                    let mut v = serde_json::to_vec_pretty(&result.to_json()).expect("JSON values serialise");
                    v.push(b'\n');
                    v
                }
                Format::Csv => result.to_csv(),
            };
            write_output(&bytes, a.output.out.as_deref())?;
        }
    }
    Ok(())
}

fn write_fixtures(dir: &Path, which: FixtureSet, angles: &[f64], format: ImageFormat) -> Result<(), Error> {
    fs::create_dir_all(dir).map_err(|e| Error::Io { path: dir.to_owned(), source: e })?;
    let ext = format.extension();
    let mut written = Vec::new();
    let mut save = |map: &segscore::LabelMap, name: String| -> Result<(), Error> {
        let path = dir.join(format!("{name}.{ext}"));
        save_label_map(map, &path, Some(format))?;
        written.push(path);
        Ok(())
    };
    match which {
        FixtureSet::S1 | FixtureSet::S3 => {
            let (spec, stem) =
                if which == FixtureSet::S1 { (FixtureSpec::s1(), "s1") } else { (FixtureSpec::s3(), "s3") };
            let f = generate_fixture(&spec)?;
            save(&f.auto, format!("{stem}_auto"))?;
            save(&f.gt, format!("{stem}_gt"))?;
        }
        FixtureSet::Rotations => {
            let base = FixtureSpec::rotation_base();
            save(&generate_fixture(&base)?.gt, "rot_gt".into())?;
            for &angle in angles {
                save(&generate_fixture(&base.rotated(angle))?.auto, format!("rot_{angle}_auto"))?;
            }
        }
    }
    for p in &written {
        println!("{}", p.display());
    }
    Ok(())
}

fn write_output(bytes: &[u8], out: Option<&Path>) -> Result<(), Error> {
    use std::io::Write;
    match out {
        Some(path) => fs::write(path, bytes).map_err(|e| Error::Io { path: path.to_owned(), source: e }),
        None => std::io::stdout().lock().write_all(bytes).map_err(|e| Error::Io { path: "<stdout>".into(), source: e }),
    }
}
