//! Membership validators for the sentential-form families of the normal forms.

use std::collections::BTreeSet;

use scm_core::{symbol_token, GeneralKind, Symbol, Word};
use thiserror::Error;

/// Errors from family-membership checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    /// The word uses a symbol that is neither a family letter nor a terminal.
    #[error("symbol {0} is neither a family letter nor a declared terminal")]
    OutsideAlphabet(String),
}

/// Identifies one of the five sentential-form families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// `{A,C}* {S,eps} ({B,D}* u T)*`, five nonterminals.
    L52,
    /// `{CA,CAA}* {S,eps,CC} ({BC,BBC}* u T)*`, four nonterminals.
    L42,
    /// `{ABB,AB}* {S,eps,AA,ABA} ({BA,BBA}* u T)*`, three nonterminals.
    L32,
    /// `{0,1}* {S,eps,$} ({0,1}* u T)*`, center-marked forms.
    Lmm,
    /// `{10,100}* {S,eps,$} ({01,001}* u T)*`, strict center-marked forms.
    Lsmm,
}

impl Family {
    /// The family covering sentential forms of grammars of `kind`.
    ///
    /// The mixed center-marked kind shares the plain center-marked family.
    pub fn for_kind(kind: GeneralKind) -> Option<Family> {
        match kind {
            GeneralKind::Type0 => None,
            GeneralKind::Gnf52 => Some(Family::L52),
            GeneralKind::Gnf42 => Some(Family::L42),
            GeneralKind::Gnf32 => Some(Family::L32),
            GeneralKind::Mmnf | GeneralKind::Mmmnf => Some(Family::Lmm),
            GeneralKind::Smmnf => Some(Family::Lsmm),
        }
    }

    /// Display tag.
    pub fn token(&self) -> &'static str {
        match self {
            Family::L52 => "L52",
            Family::L42 => "L42",
            Family::L32 => "L32",
            Family::Lmm => "LMM",
            Family::Lsmm => "LsMM",
        }
    }
}

/// Code for "any terminal" in the packed word representation.
const TERM: u8 = 0xFF;

/// One family's regular set `prefix* center (suffix u T)*` over letter names.
struct FamilyShape {
    letters: &'static str,
    prefix: &'static [&'static str],
    centers: &'static [&'static str],
    suffix: &'static [&'static str],
}

fn shape_of(family: Family) -> &'static FamilyShape {
    match family {
        Family::L52 => &FamilyShape {
            letters: "SABCD",
            prefix: &["A", "C"],
            centers: &["", "S"],
            suffix: &["B", "D"],
        },
        Family::L42 => &FamilyShape {
            letters: "SABC",
            prefix: &["CA", "CAA"],
            centers: &["", "S", "CC"],
            suffix: &["BC", "BBC"],
        },
        Family::L32 => &FamilyShape {
            letters: "SAB",
            prefix: &["ABB", "AB"],
            centers: &["", "S", "AA", "ABA"],
            suffix: &["BA", "BBA"],
        },
        Family::Lmm => &FamilyShape {
            letters: "S01$",
            prefix: &["0", "1"],
            centers: &["", "S", "$"],
            suffix: &["0", "1"],
        },
        Family::Lsmm => &FamilyShape {
            letters: "S01$",
            prefix: &["10", "100"],
            centers: &["", "S", "$"],
            suffix: &["01", "001"],
        },
    }
}

fn member_codes(shape: &FamilyShape, codes: &[u8]) -> bool {
    let n = codes.len();
    let mut prefix_ok = vec![false; n + 1];
    prefix_ok[0] = true;
    for i in 1..=n {
        prefix_ok[i] = shape.prefix.iter().any(|block| {
            block.len() <= i
                && prefix_ok[i - block.len()]
                && codes[i - block.len()..i] == *block.as_bytes()
        });
    }
    let mut suffix_ok = vec![false; n + 1];
    suffix_ok[n] = true;
    for i in (0..n).rev() {
        suffix_ok[i] = (codes[i] == TERM && suffix_ok[i + 1])
            || shape.suffix.iter().any(|block| {
                i + block.len() <= n
                    && codes[i..i + block.len()] == *block.as_bytes()
                    && suffix_ok[i + block.len()]
            });
    }
    (0..=n).any(|i| {
        prefix_ok[i]
            && shape.centers.iter().any(|center| {
                i + center.len() <= n
                    && codes[i..i + center.len()] == *center.as_bytes()
                    && suffix_ok[i + center.len()]
            })
    })
}

/// Checks words against one family's regular set.
#[derive(Debug, Clone)]
pub struct FamilyValidator {
    family: Family,
    terminals: BTreeSet<Symbol>,
}

impl FamilyValidator {
    /// A validator for `family` whose suffix part may interleave `terminals`.
    pub fn new(family: Family, terminals: BTreeSet<Symbol>) -> Self {
        FamilyValidator { family, terminals }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Membership of `w`; family letters win over `terminals` on collision.
    pub fn member(&self, w: &Word) -> Result<bool, FamilyError> {
        let shape = shape_of(self.family);
        let mut codes = Vec::with_capacity(w.len());
        for sym in w.iter() {
            let name = sym.name();
            if name.len() == 1 && shape.letters.contains(name) {
                codes.push(name.as_bytes()[0]);
            } else if self.terminals.contains(sym) {
                codes.push(TERM);
            } else {
                return Err(FamilyError::OutsideAlphabet(symbol_token(sym)));
            }
        }
        Ok(member_codes(shape, &codes))
    }
}

/// Membership of `w` in the validator's regular set.
pub fn family_member(validator: &FamilyValidator, w: &Word) -> Result<bool, FamilyError> {
    validator.member(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn validator(family: Family) -> FamilyValidator {
        FamilyValidator::new(family, BTreeSet::from([Symbol::new("a")]))
    }

    fn member(family: Family, compact: &str) -> bool {
        validator(family).member(&Word::from_chars(compact)).unwrap()
    }

    #[test]
    fn block_family_examples() {
        assert!(member(Family::L42, "CASBC"));
        assert!(member(Family::L32, "ABA"));
        assert!(!member(Family::L52, "BA"));
        assert!(member(Family::L52, "AASBaB"));
        assert!(member(Family::L42, "CACCBBC"));
        assert!(!member(Family::L42, "CAAA"));
        assert!(member(Family::L32, "ABBAABA"));
    }

    #[test]
    fn center_marked_family_examples() {
        assert!(member(Family::Lmm, "01$10a"));
        assert!(member(Family::Lmm, "$"));
        assert!(member(Family::Lsmm, "10$01"));
        assert!(member(Family::Lsmm, "100S001a"));
        assert!(!member(Family::Lsmm, "01$"));
    }

    #[test]
    fn strict_family_excludes_half_eaten_blocks() {
        // One shrink step on 1 0 $ 0 1 strands the outer pair outside the set.
        assert!(member(Family::Lsmm, "10$01"));
        assert!(!member(Family::Lsmm, "1$1"));
    }

    #[test]
    fn empty_word_belongs_to_every_family() {
        for family in [Family::L52, Family::L42, Family::L32, Family::Lmm, Family::Lsmm] {
            assert!(validator(family).member(&Word::empty()).unwrap(), "{}", family.token());
        }
    }

    #[test]
    fn symbols_outside_the_alphabet_are_errors() {
        let v = validator(Family::L52);
        assert_eq!(
            v.member(&Word::from_chars("AX")),
            Err(FamilyError::OutsideAlphabet("X".to_string()))
        );
        // Letters of other families are not terminals here.
        assert!(v.member(&Word::from_chars("0$")).is_err());
    }

    #[test]
    fn kinds_map_onto_their_families() {
        assert_eq!(Family::for_kind(GeneralKind::Gnf52), Some(Family::L52));
        assert_eq!(Family::for_kind(GeneralKind::Mmmnf), Some(Family::Lmm));
        assert_eq!(Family::for_kind(GeneralKind::Smmnf), Some(Family::Lsmm));
        assert_eq!(Family::for_kind(GeneralKind::Type0), None);
    }

    // Reference automata, coded directly from the family equations as explicit
    // state machines. States are bit flags over a subset-simulated NFA; the
    // suffix point also serves as the accept point reached after the center.
    mod reference {
        use super::TERM;

        const P0: u16 = 1 << 0;
        const P1: u16 = 1 << 1;
        const P2: u16 = 1 << 2;
        const C1: u16 = 1 << 3;
        const C2: u16 = 1 << 4;
        const C3: u16 = 1 << 5;
        const Q0: u16 = 1 << 6;
        const S1: u16 = 1 << 7;
        const S2: u16 = 1 << 8;

        fn run(codes: &[u8], step: impl Fn(u16, u8) -> u16) -> bool {
            let mut states = P0;
            for &c in codes {
                let mut next = 0;
                for bit in 0..16 {
                    if states & (1 << bit) != 0 {
                        next |= step(1 << bit, c);
                    }
                }
                states = next;
            }
            states & (P0 | Q0) != 0
        }

        pub fn l52(codes: &[u8]) -> bool {
            run(codes, |state, c| match (state, c) {
                (P0, b'A' | b'C') => P0,
                (P0, b'S') => Q0,
                (P0 | Q0, b'B' | b'D' | TERM) => Q0,
                _ => 0,
            })
        }

        pub fn l42(codes: &[u8]) -> bool {
            run(codes, |state, c| match (state, c) {
                // Prefix blocks CA and CAA; C may also open the center CC.
                (P0, b'C') => P1 | C1,
                (P1, b'A') => P0 | P2,
                (P2, b'A') => P0,
                (C1, b'C') => Q0,
                (P0, b'S') => Q0,
                // Suffix blocks BC and BBC, with terminals interleaved.
                (P0 | Q0, b'B') => S1,
                (P0 | Q0, TERM) => Q0,
                (S1, b'C') => Q0,
                (S1, b'B') => S2,
                (S2, b'C') => Q0,
                _ => 0,
            })
        }

        pub fn l32(codes: &[u8]) -> bool {
            run(codes, |state, c| match (state, c) {
                // A opens a prefix block (ABB or AB), the center AA, or ABA.
                (P0, b'A') => P1 | C1 | C2,
                (P1, b'B') => P0 | P2,
                (P2, b'B') => P0,
                (C1, b'A') => Q0,
                (C2, b'B') => C3,
                (C3, b'A') => Q0,
                (P0, b'S') => Q0,
                (P0 | Q0, b'B') => S1,
                (P0 | Q0, TERM) => Q0,
                (S1, b'A') => Q0,
                (S1, b'B') => S2,
                (S2, b'A') => Q0,
                _ => 0,
            })
        }

        pub fn lmm(codes: &[u8]) -> bool {
            run(codes, |state, c| match (state, c) {
                (P0, b'0' | b'1') => P0,
                (P0, b'S' | b'$') => Q0,
                (P0 | Q0, TERM) => Q0,
                (Q0, b'0' | b'1') => Q0,
                _ => 0,
            })
        }

        pub fn lsmm(codes: &[u8]) -> bool {
            run(codes, |state, c| match (state, c) {
                // Prefix blocks 10 and 100.
                (P0, b'1') => P1,
                (P1, b'0') => P0 | P2,
                (P2, b'0') => P0,
                (P0, b'S' | b'$') => Q0,
                // Suffix blocks 01 and 001, with terminals interleaved.
                (P0 | Q0, b'0') => S1,
                (P0 | Q0, TERM) => Q0,
                (S1, b'1') => Q0,
                (S1, b'0') => S2,
                (S2, b'1') => Q0,
                _ => 0,
            })
        }
    }

    fn exhaustive_agreement(
        family: Family,
        alphabet: &[u8],
        nfa: impl Fn(&[u8]) -> bool,
        max_len: usize,
    ) {
        let shape = shape_of(family);
        let mut word = Vec::with_capacity(max_len);
        fn recurse(
            word: &mut Vec<u8>,
            alphabet: &[u8],
            remaining: usize,
            shape: &FamilyShape,
            family: Family,
            nfa: &impl Fn(&[u8]) -> bool,
        ) {
            assert_eq!(
                member_codes(shape, word),
                nfa(word),
                "{} disagrees on {:?}",
                family.token(),
                word.iter().map(|&c| if c == TERM { 't' } else { c as char }).collect::<String>()
            );
            if remaining == 0 {
                return;
            }
            for &c in alphabet {
                word.push(c);
                recurse(word, alphabet, remaining - 1, shape, family, nfa);
                word.pop();
            }
        }
        recurse(&mut word, alphabet, max_len, shape, family, &nfa);
    }

    #[test]
    fn validator_matches_reference_automaton_l52() {
        exhaustive_agreement(Family::L52, &[b'S', b'A', b'B', b'C', b'D', TERM], reference::l52, 10);
    }

    #[test]
    fn validator_matches_reference_automaton_l42() {
        exhaustive_agreement(Family::L42, &[b'S', b'A', b'B', b'C', TERM], reference::l42, 10);
    }

    #[test]
    fn validator_matches_reference_automaton_l32() {
        exhaustive_agreement(Family::L32, &[b'S', b'A', b'B', TERM], reference::l32, 10);
    }

    #[test]
    fn validator_matches_reference_automaton_lmm() {
        exhaustive_agreement(Family::Lmm, &[b'S', b'0', b'1', b'$', TERM], reference::lmm, 10);
    }

    #[test]
    fn validator_matches_reference_automaton_lsmm() {
        exhaustive_agreement(Family::Lsmm, &[b'S', b'0', b'1', b'$', TERM], reference::lsmm, 10);
    }
}
