use alloc::string::String;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    /// Hypotheses of the claim do not hold for this input.
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One checked claim with a human-readable detail line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    pub fn new(claim: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            status: Status::from_bool(ok),
            detail: detail.into(),
        }
    }

    pub fn skipped(claim: impl Into<String>, why: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            status: Status::Skipped,
            detail: why.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
