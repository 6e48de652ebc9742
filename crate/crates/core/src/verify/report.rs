use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::error::Error;
use crate::vset::VertexSet;

/// The statements a scenario can instantiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    Transfer,
    SdCorona,
    FBounds,
    FZero,
    FVMinus1,
    FSGamma,
    FGammaPrime,
    AdimFormula,
    Mod5Exists,
    Mod5None,
    JoinSum,
    JoinDominates,
    JoinKt,
    PermFamily,
    NtUnion,
    ComplementInv,
    RemarkBounds,
    P5C5Example,
}

impl Claim {
    pub const ALL: [Claim; 18] = [
        Claim::Transfer,
        Claim::SdCorona,
        Claim::FBounds,
        Claim::FZero,
        Claim::FVMinus1,
        Claim::FSGamma,
        Claim::FGammaPrime,
        Claim::AdimFormula,
        Claim::Mod5Exists,
        Claim::Mod5None,
        Claim::JoinSum,
        Claim::JoinDominates,
        Claim::JoinKt,
        Claim::PermFamily,
        Claim::NtUnion,
        Claim::ComplementInv,
        Claim::RemarkBounds,
        Claim::P5C5Example,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Transfer => "TRANSFER",
            Claim::SdCorona => "SD_CORONA",
            Claim::FBounds => "F_BOUNDS",
            Claim::FZero => "F_ZERO",
            Claim::FVMinus1 => "F_VMINUS1",
            Claim::FSGamma => "F_SGAMMA",
            Claim::FGammaPrime => "F_GAMMAPRIME",
            Claim::AdimFormula => "ADIM_FORMULA",
            Claim::Mod5Exists => "MOD5_EXISTS",
            Claim::Mod5None => "MOD5_NONE",
            Claim::JoinSum => "JOIN_SUM",
            Claim::JoinDominates => "JOIN_DOMINATES",
            Claim::JoinKt => "JOIN_KT",
            Claim::PermFamily => "PERM_FAMILY",
            Claim::NtUnion => "NT_UNION",
            Claim::ComplementInv => "COMPLEMENT_INV",
            Claim::RemarkBounds => "REMARK_BOUNDS",
            Claim::P5C5Example => "P5C5_EXAMPLE",
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Claim::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::invalid(format!("unknown claim `{s}`")))
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    /// The claim's hypotheses could not be certified for these inputs.
    Inapplicable,
    Error,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Inapplicable => "INAPPLICABLE",
            Outcome::Error => "ERROR",
        }
    }

    /// Whether this outcome spoils an aggregate run.
    pub fn is_failure(self) -> bool {
        matches!(self, Outcome::Fail | Outcome::Error)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Result of checking one claim on one set of inputs.
///
/// `expected` and `computed` are compact tokens. The outcome is `Pass` when
/// the claim's comparison holds and no auxiliary requirement failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub claim: Claim,
    pub outcome: Outcome,
    pub expected: String,
    pub computed: String,
    /// `Sd_A(G ⊙ H) - |V| Sd_A(H)` for corona claims.
    pub f_value: Option<i64>,
    pub witness: Option<VertexSet>,
    pub notes: Vec<String>,
    /// Auxiliary requirements that did not hold.
    pub failures: Vec<String>,
    pub elapsed: Duration,
    holds: bool,
}

impl VerificationReport {
    /// A report whose main comparison is `expected == computed`.
    pub fn equality(claim: Claim, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let holds = expected == computed;
        Self::predicate(claim, expected, computed, holds)
    }

    /// A report whose main comparison is an arbitrary predicate.
    pub fn predicate(claim: Claim, expected: impl ToString, computed: impl ToString, holds: bool) -> Self {
        let mut r = VerificationReport {
            id: claim.name().to_ascii_lowercase(),
            claim,
            outcome: Outcome::Fail,
            expected: expected.to_string(),
            computed: computed.to_string(),
            f_value: None,
            witness: None,
            notes: Vec::new(),
            failures: Vec::new(),
            elapsed: Duration::ZERO,
            holds,
        };
        r.settle();
        r
    }

    /// An `Inapplicable` or `Error` report carrying the reason as a note.
    pub fn from_error(claim: Claim, err: &Error) -> Self {
        let mut r = Self::predicate(claim, "-", "-", false);
        r.outcome = match err {
            Error::HypothesisNotMet(_) => Outcome::Inapplicable,
            _ => Outcome::Error,
        };
        r.notes.push(err.to_string());
        r
    }

    pub fn with_witness(mut self, w: VertexSet) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_f(mut self, f: i64) -> Self {
        self.f_value = Some(f);
        self
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    /// Records an auxiliary requirement; a false `ok` turns the report into `Fail`.
    pub fn require(&mut self, ok: bool, msg: impl Into<String>) {
        if !ok {
            self.failures.push(msg.into());
            self.settle();
        }
    }

    /// Replaces the expected token; the main comparison becomes string equality.
    pub fn override_expected(&mut self, expected: &str) {
        if matches!(self.outcome, Outcome::Pass | Outcome::Fail) {
            self.expected = expected.to_string();
            self.holds = self.computed == expected;
            self.settle();
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    fn settle(&mut self) {
        if matches!(self.outcome, Outcome::Pass | Outcome::Fail) {
            self.outcome = if self.holds && self.failures.is_empty() { Outcome::Pass } else { Outcome::Fail };
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} expected={} computed={} witness=", self.outcome, self.id, self.expected, self.computed)?;
        match &self.witness {
            Some(w) => write!(f, "{w}"),
            None => f.write_str("-"),
        }
    }
}

/// True when no report is `Fail` or `Error`.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| !r.outcome.is_failure())
}
