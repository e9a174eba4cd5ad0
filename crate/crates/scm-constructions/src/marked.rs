//! Transformations consuming the center-marked normal forms.

use scm_core::{GeneralGrammar, GeneralKind, ScmGrammar};

use crate::support::{assemble, checked_input, matrix, s_rule_carriers, staged_carriers};
use crate::theorem::ConstructError;

/// Simulates the mixed center erasers with two simple conditional matrices
/// of degree (3,1) over one extra marker nonterminal.
pub fn thm2_sscm_31522(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Mmmnf)?;
    let mut matrices = s_rule_carriers(g, None);
    matrices.push(matrix("r_dollar", &[("$", "")], None, None));
    matrices.push(matrix("r1", &[("0", "#"), ("1", "#")], None, Some("#")));
    matrices.push(matrix("r2", &[("#", ""), ("#", "")], Some("#$#"), None));
    assemble(g, "S01$#", matrices)
}

/// Simulates the strict center erasers on a doubled marker with seven binary
/// matrices of degree (6,3), three of them non-simple, and no new nonterminal.
pub fn thm6_scm_634723(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Smmnf)?;
    let mut matrices = staged_carriers(g, None)?;
    matrices.push(matrix("r1", &[("S", "$$")], Some("0S"), None));
    matrices.push(matrix("r2", &[("0", "$$$"), ("0", "$")], Some("0$$0"), Some("$$$")));
    matrices.push(matrix("r3", &[("1", "$$$"), ("1", "$")], Some("1$$1"), Some("$$$")));
    matrices.push(matrix("r4", &[("$", ""), ("$", "")], Some("$$$$$$"), None));
    matrices.push(matrix("r5", &[("$", ""), ("$", "")], Some("0$$$$0"), None));
    matrices.push(matrix("r6", &[("$", ""), ("$", "")], Some("1$$$$1"), Some("0$")));
    matrices.push(matrix("r7", &[("$", ""), ("$", "")], None, Some("1")));
    assemble(g, "S01$", matrices)
}

/// Replaces the center marker by the substring `SS`, leaving only three
/// nonterminals; every carried rule checks the center's absence.
pub fn thm7_scm_633(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Smmnf)?;
    let mut matrices = staged_carriers(g, Some("SS"))?;
    matrices.push(matrix("r1", &[("S", "SS")], Some("0S"), Some("SS")));
    matrices.push(matrix("r2", &[("0", "SSS"), ("0", "S")], Some("0SS0"), Some("SSS")));
    matrices.push(matrix("r3", &[("1", "SSS"), ("1", "S")], Some("1SS1"), Some("SSS")));
    matrices.push(matrix("r4", &[("S", ""), ("S", "")], Some("SSSSSS"), None));
    matrices.push(matrix("r5", &[("S", ""), ("S", "")], Some("0SSSS0"), None));
    matrices.push(matrix("r6", &[("S", ""), ("S", "")], Some("1SSSS1"), Some("0S")));
    matrices.push(matrix("r7", &[("S", ""), ("S", "")], None, Some("1")));
    assemble(g, "S01", matrices)
}

/// Replaces the center marker by the substring `S1S`, trading permit length 7
/// for forbid length 2 over three nonterminals.
pub fn thm8_scm_723(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Smmnf)?;
    // A form holding the S1S center always has the subword S1; SS need not
    // occur there, so the carriers forbid S1.
    let mut matrices = staged_carriers(g, Some("S1"))?;
    matrices.push(matrix("r1", &[("S", "S1S")], Some("0S0"), Some("1S")));
    matrices.push(matrix("r2", &[("0", "11"), ("0", "SSSS11")], Some("0S1S0"), Some("11")));
    matrices.push(matrix("r3", &[("1", "S"), ("1", "SSS")], Some("1S1S1"), Some("SS")));
    matrices.push(matrix("r4", &[("S", ""), ("S", "")], Some("SS1SSSS"), None));
    matrices.push(matrix("r5_0", &[("S", ""), ("S", "")], Some("01S1SSS"), None));
    matrices.push(matrix("r5_1", &[("S", ""), ("S", "")], Some("11S1SSS"), None));
    matrices.push(matrix("r6", &[("S", ""), ("S", "")], Some("0S1SSS0"), None));
    matrices.push(matrix("r7", &[("S", ""), ("S", "")], None, Some("0")));
    matrices.push(matrix("r8", &[("1", "")], None, Some("S")));
    assemble(g, "S01", matrices)
}
