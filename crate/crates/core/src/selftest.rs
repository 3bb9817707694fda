//! Oracle-equivalence run over a generated corpus.

use crate::certify::{certify_from_power_sums, verify_certificate, Verdict};
use crate::corpus::{generate, CorpusConfig};
use crate::power_sums::newton_power_sums;
use crate::sturm::oracle_is_real_rooted;

/// Deliberate corruption, for checking that the selftest can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negates `m_2` before the Hermite matrix is built.
    NegateM2,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelftestReport {
    pub cases: usize,
    pub real_rooted: usize,
    pub failures: Vec<String>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_selftest(config: &CorpusConfig, fault: Option<Fault>) -> SelftestReport {
    let mut report = SelftestReport::default();
    for (idx, g) in generate(config).into_iter().enumerate() {
        report.cases += 1;
        let f = &g.poly;
        let outcome = (|| -> Result<(), String> {
            let mut sums = newton_power_sums(f, None).map_err(|e| e.to_string())?;
            if fault == Some(Fault::NegateM2) && sums.values.len() > 2 {
                sums.values[2] = -sums.values[2].clone();
            }
            let cert = certify_from_power_sums(f, &sums, false).map_err(|e| e.to_string())?;
            let oracle = oracle_is_real_rooted(f).map_err(|e| e.to_string())?;
            let decided = cert.verdict == Verdict::RealRooted;
            if decided {
                report.real_rooted += 1;
            }
            if decided != oracle {
                return Err(format!(
                    "verdict {} but Sturm oracle says real-rooted={oracle}",
                    cert.verdict
                ));
            }
            verify_certificate(&cert, f).map_err(|r| format!("certificate rejected: {r}"))
        })();
        if let Err(msg) = outcome {
            report.failures.push(format!("case {idx} ({f}): {msg}"));
        }
    }
    report
}
