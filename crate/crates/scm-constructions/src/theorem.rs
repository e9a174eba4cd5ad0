//! Theorem identities: input kinds, pinned measure rows, and dispatch.

use scm_core::{metrics, GeneralGrammar, GeneralKind, GrammarError, ScmGrammar, TupleBound};
use thiserror::Error;

use crate::blocks::{thm1_sscm_21532, thm3_sscm_31433, thm4_scm_434726, thm5_scm_524724};
use crate::marked::{thm2_sscm_31522, thm6_scm_634723, thm7_scm_633, thm8_scm_723};

/// Errors from the theorem transformations.
#[derive(Debug, Error)]
pub enum ConstructError {
    /// The input grammar declares a different kind than the theorem consumes.
    #[error("transformation input must declare kind {expected}, found {found}")]
    WrongInputKind { expected: &'static str, found: &'static str },
    /// The input declares the right kind but violates its rule shapes.
    #[error("input is not in the {kind} normal form: {offenses}")]
    NotNormalForm { kind: &'static str, offenses: String },
    /// A center-marked transformation met a rule without a role tag.
    #[error("rule {index} carries no role tag; center-marked inputs must be tagged")]
    UntaggedRule { index: usize },
    /// The transformed rules do not assemble into a valid grammar.
    #[error(transparent)]
    Grammar(#[from] GrammarError),
}

/// Names one of the eight transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
}

fn row(i: usize, j: usize, n: usize, m: Option<usize>, l: usize, s: usize) -> TupleBound {
    TupleBound { i: Some(i), j: Some(j), n: Some(n), m, l: Some(l), s: Some(s) }
}

impl TheoremId {
    /// All transformations, in numbering order.
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::Thm5,
        TheoremId::Thm6,
        TheoremId::Thm7,
        TheoremId::Thm8,
    ];

    /// The command-line token, `thm1` through `thm8`.
    pub fn token(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::Thm5 => "thm5",
            TheoremId::Thm6 => "thm6",
            TheoremId::Thm7 => "thm7",
            TheoremId::Thm8 => "thm8",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.token() == token)
    }

    /// The normal form the transformation consumes.
    pub fn input_kind(self) -> GeneralKind {
        match self {
            TheoremId::Thm1 => GeneralKind::Gnf42,
            TheoremId::Thm2 => GeneralKind::Mmmnf,
            TheoremId::Thm3 | TheoremId::Thm4 | TheoremId::Thm5 => GeneralKind::Gnf32,
            TheoremId::Thm6 | TheoremId::Thm7 | TheoremId::Thm8 => GeneralKind::Smmnf,
        }
    }

    /// The measure row (i, j; n; m, l, s) the output must stay inside;
    /// `None` components are unbounded.
    pub fn expected_tuple(self) -> TupleBound {
        match self {
            TheoremId::Thm1 => row(2, 1, 5, Some(3), 2, 0),
            TheoremId::Thm2 => row(3, 1, 5, Some(2), 2, 0),
            TheoremId::Thm3 => row(3, 1, 4, Some(3), 3, 0),
            TheoremId::Thm4 => row(4, 3, 4, Some(7), 2, 6),
            TheoremId::Thm5 => row(5, 2, 4, Some(7), 2, 4),
            TheoremId::Thm6 => row(6, 3, 4, Some(7), 2, 3),
            TheoremId::Thm7 => row(6, 3, 3, None, 2, 4),
            TheoremId::Thm8 => row(7, 2, 3, None, 2, 3),
        }
    }
}

/// Runs the transformation named by `id` and checks its measure row.
pub fn construct(id: TheoremId, g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    let out = match id {
        TheoremId::Thm1 => thm1_sscm_21532(g),
        TheoremId::Thm2 => thm2_sscm_31522(g),
        TheoremId::Thm3 => thm3_sscm_31433(g),
        TheoremId::Thm4 => thm4_scm_434726(g),
        TheoremId::Thm5 => thm5_scm_524724(g),
        TheoremId::Thm6 => thm6_scm_634723(g),
        TheoremId::Thm7 => thm7_scm_633(g),
        TheoremId::Thm8 => thm8_scm_723(g),
    }?;
    let measured = metrics(&out);
    assert!(
        id.expected_tuple().admits(&measured),
        "{} output measures {measured} break the pinned row {}",
        id.token(),
        id.expected_tuple()
    );
    Ok(out)
}
