//! Maps a parsed invocation onto identity-suite runs and check campaigns,
//! serializes the combined report to one sink, and translates the outcome
//! into the exit-code contract:
//!
//! - 0: everything held (skips allowed)
//! - 1: a proven statement failed — an implementation bug
//! - 2: usage error (bad flags or an empty grid)
//! - 3: a conjecture counterexample was found — a discovery, not a bug
//! - 4: the report could not be written

use std::fs;
use std::io::Write;

use delannoy_core::{
    identity_suite, run_campaign, CampaignSpec, CheckFamily, IdentitySuiteConfig,
};

use crate::args::{Cli, Command, GridArgs};
use crate::report::{self, summarize_lines, ReportLine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Exit code from the two failure classes; an implementation bug outranks
/// a discovery.
pub fn exit_code_for(theorem_failure: bool, counterexample: bool) -> i32 {
    if theorem_failure {
        EXIT_THEOREM_FAILURE
    } else if counterexample {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

struct RunOutput {
    lines: Vec<ReportLine>,
    theorem_failure: bool,
    counterexample: bool,
}

impl RunOutput {
    fn new() -> Self {
        RunOutput {
            lines: Vec::new(),
            theorem_failure: false,
            counterexample: false,
        }
    }
}

fn identity_config(args: &GridArgs) -> Result<IdentitySuiteConfig, String> {
    let mut config = IdentitySuiteConfig::default();
    if let Some(n) = args.max_n {
        if n == 0 {
            return Err("max-n must be at least 1".to_string());
        }
        config.power_sum_n_max = n;
    }
    if let Some(ref m_set) = args.m_set {
        let mut m_set = m_set.clone();
        m_set.sort_unstable();
        m_set.dedup();
        if m_set.is_empty() {
            return Err("m-set must be nonempty".to_string());
        }
        if let Some(&bad) = m_set.iter().find(|&&m| m != 3 && m != 4) {
            return Err(format!(
                "closed forms for the weighted power sums exist only for m in {{3, 4}}, got {bad}"
            ));
        }
        config.power_sum_m_set = m_set;
    }
    Ok(config)
}

fn run_identities(args: &GridArgs, out: &mut RunOutput) -> Result<(), String> {
    let config = identity_config(args)?;
    let verdicts = identity_suite(&config);
    out.theorem_failure |= verdicts.iter().any(|v| !v.holds);
    out.lines.extend(
        verdicts
            .iter()
            .map(|v| ReportLine::from_identity(v, !args.no_timing)),
    );
    Ok(())
}

fn run_families(
    families: &[CheckFamily],
    args: &GridArgs,
    out: &mut RunOutput,
) -> Result<(), String> {
    for &family in families {
        let mut spec = CampaignSpec::new(family);
        spec.n_max = args.max_n;
        spec.m_set = args.m_set.clone();
        spec.p_max = args.p_max;
        spec.x_range = args.x_range;
        spec.e = args.e;
        let records = run_campaign(&spec).map_err(|err| err.to_string())?;
        out.theorem_failure |= records.iter().any(|r| r.is_theorem_failure());
        out.counterexample |= records.iter().any(|r| r.is_counterexample());
        out.lines.extend(
            records
                .iter()
                .map(|r| ReportLine::from_check(r, !args.no_timing)),
        );
    }
    Ok(())
}

const THEOREM_FAMILIES: [CheckFamily; 5] = [
    CheckFamily::Thm13,
    CheckFamily::Thm14,
    CheckFamily::SunTauraso,
    CheckFamily::IntroModP4,
    CheckFamily::IntroModN2,
];

const CONJECTURE_FAMILIES: [CheckFamily; 3] = [
    CheckFamily::Conj52,
    CheckFamily::ConjSunLast,
    CheckFamily::ConjGuoLast,
];

fn assemble(command: &Command) -> Result<RunOutput, String> {
    let args = command.grid_args();
    let mut out = RunOutput::new();
    match command {
        Command::Identities(_) => run_identities(args, &mut out)?,
        Command::Theorems(_) => run_families(&THEOREM_FAMILIES, args, &mut out)?,
        Command::Conjectures(_) => run_families(&CONJECTURE_FAMILIES, args, &mut out)?,
        Command::Divisibility(_) => {
            run_families(&[CheckFamily::Divisibility], args, &mut out)?
        }
        Command::All(_) => {
            run_identities(args, &mut out)?;
            run_families(&THEOREM_FAMILIES, args, &mut out)?;
            run_families(&[CheckFamily::Divisibility], args, &mut out)?;
            run_families(&CONJECTURE_FAMILIES, args, &mut out)?;
        }
    }
    Ok(out)
}

fn write_report(rendered: &str, args: &GridArgs) -> std::io::Result<()> {
    match &args.out_path {
        Some(path) => fs::write(path, rendered),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle.write_all(rendered.as_bytes())?;
            handle.flush()
        }
    }
}

/// Runs a validated invocation end to end and returns the process exit
/// code. Grid/semantic errors go to stderr with exit 2, write failures
/// with exit 4.
pub fn execute(cli: &Cli) -> i32 {
    let args = cli.command.grid_args();
    if args.jobs == Some(0) {
        eprintln!("error: jobs must be at least 1");
        return EXIT_USAGE;
    }
    let assembled = match args.jobs {
        None => assemble(&cli.command),
        Some(jobs) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                Ok(pool) => pool,
                Err(err) => {
                    eprintln!("error: could not build worker pool: {err}");
                    return EXIT_USAGE;
                }
            };
            pool.install(|| assemble(&cli.command))
        }
    };
    let out = match assembled {
        Ok(out) => out,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_USAGE;
        }
    };
    let summary = summarize_lines(&out.lines);
    let rendered = report::render(&out.lines, &summary, args.format);
    if let Err(err) = write_report(&rendered, args) {
        eprintln!("error: could not write report: {err}");
        return EXIT_IO;
    }
    exit_code_for(out.theorem_failure, out.counterexample)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_precedence() {
        assert_eq!(exit_code_for(false, false), EXIT_OK);
        assert_eq!(exit_code_for(true, false), EXIT_THEOREM_FAILURE);
        assert_eq!(exit_code_for(false, true), EXIT_COUNTEREXAMPLE);
        // a bug outranks a discovery
        assert_eq!(exit_code_for(true, true), EXIT_THEOREM_FAILURE);
    }

    #[test]
    fn identity_config_validation() {
        let mut args = crate::args::parse_args(["delannoy", "identities"])
            .unwrap()
            .command
            .grid_args()
            .clone();
        assert!(identity_config(&args).is_ok());
        args.m_set = Some(vec![3, 5]);
        assert!(identity_config(&args).unwrap_err().contains("m in {3, 4}"));
        args.m_set = Some(vec![4, 3, 3]);
        let config = identity_config(&args).unwrap();
        assert_eq!(config.power_sum_m_set, vec![3, 4]);
        args.m_set = None;
        args.max_n = Some(0);
        assert!(identity_config(&args).unwrap_err().contains("max-n"));
    }
}
