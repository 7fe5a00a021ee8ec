use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use tritur_core::certificate::{parse_records, verify_record, CertError};

use super::{exit, read_graph, BudgetArgs, Failure, Outcome};

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    pub cert: PathBuf,
    pub graph: PathBuf,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let text = fs::read_to_string(&args.cert)
        .map_err(|e| Failure::usage(format!("{}: {e}", args.cert.display())))?;
    let records = parse_records(&text).map_err(|e| Failure::new(exit::MISMATCH, e.to_string()))?;
    let cfg = args.budget.config();
    for (i, rec) in records.iter().enumerate() {
        match verify_record(rec, &g, &cfg) {
            Ok(()) => {}
            Err(CertError::Search(e)) => return Err(e.into()),
            Err(e) => {
                return Err(Failure::new(
                    exit::MISMATCH,
                    format!("record {} ({}): {e}", i + 1, rec.kind),
                ))
            }
        }
    }
    writeln!(out, "ok {} records", records.len())?;
    Ok(exit::OK)
}
