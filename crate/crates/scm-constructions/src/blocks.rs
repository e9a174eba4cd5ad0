//! Transformations consuming the block normal forms.

use scm_core::{GeneralGrammar, GeneralKind, ScmGrammar};

use crate::support::{assemble, checked_input, matrix, s_rule_carriers};
use crate::theorem::ConstructError;

/// Simulates the four-nonterminal block erasers with three simple
/// conditional matrices of degree (2,1) over one extra marker nonterminal.
pub fn thm1_sscm_21532(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Gnf42)?;
    let mut matrices = s_rule_carriers(g, None);
    matrices.push(matrix("r1", &[("A", "#"), ("B", "#")], None, Some("#")));
    matrices.push(matrix("r2", &[("C", "#"), ("C", "#")], None, Some("#")));
    matrices.push(matrix("r3", &[("#", ""), ("#", "")], Some("##"), None));
    assemble(g, "SABC#", matrices)
}

/// Simulates the three-nonterminal block erasers with three simple
/// conditional matrices of length 3 and degree (3,1).
pub fn thm3_sscm_31433(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Gnf32)?;
    let mut matrices = s_rule_carriers(g, None);
    matrices.push(matrix("r1", &[("B", "#"), ("B", "#"), ("B", "#")], None, Some("#")));
    matrices.push(matrix("r2", &[("A", "#"), ("A", "##")], None, Some("#")));
    matrices.push(matrix("r3", &[("#", ""), ("#", ""), ("#", "")], Some("###"), None));
    assemble(g, "SAB#", matrices)
}

/// Simulates the three-nonterminal block erasers with seven binary matrices
/// of degree (4,3), six of them non-simple.
pub fn thm4_scm_434726(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Gnf32)?;
    let mut matrices = s_rule_carriers(g, None);
    matrices.push(matrix("r1", &[("B", "#"), ("B", "#")], Some("BBB"), Some("#")));
    matrices.push(matrix("r2", &[("#", ""), ("B", "###")], Some("A##B"), Some("###")));
    matrices.push(matrix("r3", &[("A", "#"), ("A", "#")], Some("AA"), Some("#")));
    matrices.push(matrix("r4", &[("#", ""), ("#", "")], Some("####"), Some("#B")));
    matrices.push(matrix("r5", &[("#", ""), ("#", "")], Some("A##A"), Some("BBB")));
    matrices.push(matrix("r6", &[("#", ""), ("#", "")], Some("B##B"), None));
    matrices.push(matrix("r7", &[("#", ""), ("#", "")], Some("##"), Some("A")));
    assemble(g, "SAB#", matrices)
}

/// Simulates the three-nonterminal block erasers with seven binary matrices
/// of degree (5,2), four of them non-simple.
pub fn thm5_scm_524724(g: &GeneralGrammar) -> Result<ScmGrammar, ConstructError> {
    checked_input(g, GeneralKind::Gnf32)?;
    let mut matrices = s_rule_carriers(g, None);
    matrices.push(matrix("r1", &[("B", "#"), ("B", "AA")], Some("ABBBA"), Some("AA")));
    matrices.push(matrix("r2", &[("B", "###")], Some("A#AAB"), Some("##")));
    matrices.push(matrix("r3", &[("#", ""), ("#", "")], Some("#AA#"), None));
    matrices.push(matrix("r4", &[("A", "#"), ("A", "###")], Some("AA"), Some("#")));
    matrices.push(matrix("r5", &[("#", ""), ("#", "")], Some("####"), None));
    matrices.push(matrix("r6", &[("#", ""), ("#", "")], Some("B##B"), None));
    matrices.push(matrix("r7", &[("#", ""), ("#", "")], Some("##"), Some("A")));
    assemble(g, "SAB#", matrices)
}
