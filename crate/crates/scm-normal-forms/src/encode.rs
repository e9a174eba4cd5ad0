//! Encoders from the (5,2) block normal form into the derived normal forms.

use scm_core::{
    classify_rule, validate_normal_form, GeneralGrammar, GeneralKind, GeneralRule, GrammarError,
    RuleRole, RuleShape, Symbol, Word,
};
use thiserror::Error;

/// Errors from the normal-form encoders.
#[derive(Debug, Error)]
pub enum EncodeError {
    /// The input grammar does not declare the (5,2) block kind.
    #[error("encoder input must declare kind gnf52, found {0}")]
    WrongInputKind(&'static str),
    /// The input grammar declares gnf52 but violates its rule shapes.
    #[error("input is not in the (5,2) block normal form: {0}")]
    NotNormalForm(String),
    /// The requested target kind has no encoder.
    #[error("no encoder targets kind {0}")]
    UnsupportedTarget(&'static str),
    /// The re-encoded rules do not assemble into a valid grammar.
    #[error(transparent)]
    Grammar(#[from] GrammarError),
}

fn checked_block_input(g: &GeneralGrammar) -> Result<(), EncodeError> {
    if g.kind() != GeneralKind::Gnf52 {
        return Err(EncodeError::WrongInputKind(g.kind().token()));
    }
    let report = validate_normal_form(g, GeneralKind::Gnf52);
    if !report.is_valid() {
        return Err(EncodeError::NotNormalForm(report.offenses().join("; ")));
    }
    Ok(())
}

fn spelled(compact: &str) -> Word {
    Word::from_chars(compact)
}

fn image_word(word: &Word, image: &dyn Fn(&str) -> Option<&'static str>) -> Word {
    let mut out = Vec::new();
    for sym in word.iter() {
        match image(sym.name()) {
            Some(img) => out.extend(img.chars().map(|c| Symbol::new(c.to_string()))),
            None => out.push(sym.clone()),
        }
    }
    Word::new(out)
}

fn is_eraser_of(rule: &GeneralRule, lhs: &str) -> bool {
    rule.lhs == spelled(lhs) && rule.rhs.is_empty()
}

/// Applies a block morphism to every context-free rule and swaps the erasers.
fn block_reencode(
    g: &GeneralGrammar,
    target: GeneralKind,
    image: &dyn Fn(&str) -> Option<&'static str>,
    erasers: [&str; 2],
    nonterminals: &str,
) -> Result<GeneralGrammar, EncodeError> {
    checked_block_input(g)?;
    let mut rules = Vec::with_capacity(g.rules().len());
    for rule in g.rules() {
        let shape =
            classify_rule(g, rule, GeneralKind::Gnf52).expect("validated gnf52 rules classify");
        let (lhs, rhs) = if shape == RuleShape::Eraser {
            let replacement = if is_eraser_of(rule, "AB") { erasers[0] } else { erasers[1] };
            (spelled(replacement), Word::empty())
        } else {
            (rule.lhs.clone(), image_word(&rule.rhs, image))
        };
        rules.push(GeneralRule::with_role(lhs, rhs, shape.role()));
    }
    let out = GeneralGrammar::new(
        target,
        g.terminals().clone(),
        spelled(nonterminals).symbols().iter().cloned().collect(),
        Symbol::new("S"),
        rules,
    )?;
    debug_assert!(validate_normal_form(&out, target).is_valid());
    Ok(out)
}

/// Re-encodes a (5,2) block grammar over the four-nonterminal block alphabet.
pub fn encode_gnf42(g: &GeneralGrammar) -> Result<GeneralGrammar, EncodeError> {
    block_reencode(
        g,
        GeneralKind::Gnf42,
        &|name| match name {
            "A" => Some("CAA"),
            "B" => Some("BBC"),
            "C" => Some("CA"),
            "D" => Some("BC"),
            _ => None,
        },
        ["AB", "CC"],
        "SABC",
    )
}

/// Re-encodes a (5,2) block grammar over the three-nonterminal block alphabet.
pub fn encode_gnf32(g: &GeneralGrammar) -> Result<GeneralGrammar, EncodeError> {
    block_reencode(
        g,
        GeneralKind::Gnf32,
        &|name| match name {
            "A" => Some("ABB"),
            "B" => Some("BA"),
            "C" => Some("AB"),
            "D" => Some("BBA"),
            _ => None,
        },
        ["AA", "BBB"],
        "SAB",
    )
}

struct MmVariant {
    left: fn(&str) -> &'static str,
    right: fn(&str) -> &'static str,
    shrinkers: [&'static str; 2],
}

fn mm_variant(kind: GeneralKind) -> Option<MmVariant> {
    match kind {
        GeneralKind::Mmnf => Some(MmVariant {
            left: |name| if name == "A" { "0" } else { "1" },
            right: |name| if name == "B" { "0" } else { "1" },
            shrinkers: ["0$0", "1$1"],
        }),
        GeneralKind::Smmnf => Some(MmVariant {
            left: |name| if name == "A" { "10" } else { "100" },
            right: |name| if name == "B" { "01" } else { "001" },
            shrinkers: ["0$0", "1$1"],
        }),
        GeneralKind::Mmmnf => Some(MmVariant {
            left: |name| if name == "A" { "0" } else { "1" },
            right: |name| if name == "B" { "1" } else { "0" },
            shrinkers: ["0$1", "1$0"],
        }),
        _ => None,
    }
}

fn mapped_blocks(word: &Word, map: fn(&str) -> &'static str) -> Word {
    let mut out = Vec::new();
    for sym in word.iter() {
        out.extend(map(sym.name()).chars().map(|c| Symbol::new(c.to_string())));
    }
    Word::new(out)
}

/// Re-encodes a (5,2) block grammar into a center-marked normal form.
///
/// `variant` selects the plain, strict, or mixed marker kind. Each final rule
/// `S -> u v` becomes the center-introducing `S -> u' $ v'`; the block erasers
/// become the variant's two shrinking rules plus the marker eraser `$ -> eps`.
pub fn encode_mm(g: &GeneralGrammar, variant: GeneralKind) -> Result<GeneralGrammar, EncodeError> {
    let Some(spec) = mm_variant(variant) else {
        return Err(EncodeError::UnsupportedTarget(variant.token()));
    };
    checked_block_input(g)?;
    let marker = Word::new(vec![Symbol::new("$")]);
    let s = Word::new(vec![Symbol::new("S")]);
    let mut rules = Vec::with_capacity(g.rules().len() + 1);
    for rule in g.rules() {
        let shape =
            classify_rule(g, rule, GeneralKind::Gnf52).expect("validated gnf52 rules classify");
        let mapped = match &shape {
            RuleShape::Stage1 { u, a } => GeneralRule::with_role(
                s.clone(),
                mapped_blocks(u, spec.left).concat(&s).concat(&Word::new(vec![a.clone()])),
                RuleRole::Stage1,
            ),
            RuleShape::Stage2S { u, v } => GeneralRule::with_role(
                s.clone(),
                mapped_blocks(u, spec.left).concat(&s).concat(&mapped_blocks(v, spec.right)),
                RuleRole::Stage2S,
            ),
            RuleShape::Stage2Final { u, v } => GeneralRule::with_role(
                s.clone(),
                mapped_blocks(u, spec.left)
                    .concat(&marker)
                    .concat(&mapped_blocks(v, spec.right)),
                RuleRole::CenterIntro,
            ),
            RuleShape::Eraser => {
                let replacement =
                    if is_eraser_of(rule, "AB") { spec.shrinkers[0] } else { spec.shrinkers[1] };
                GeneralRule::with_role(spelled(replacement), marker.clone(), RuleRole::Eraser)
            }
            _ => unreachable!("gnf52 has no center-marked shapes"),
        };
        rules.push(mapped);
    }
    rules.push(GeneralRule::with_role(marker.clone(), Word::empty(), RuleRole::CenterErase));
    let out = GeneralGrammar::new(
        variant,
        g.terminals().clone(),
        ["S", "0", "1", "$"].into_iter().map(Symbol::new).collect(),
        Symbol::new("S"),
        rules,
    )?;
    debug_assert!(validate_normal_form(&out, variant).is_valid());
    Ok(out)
}

/// Dispatches to the encoder that targets `kind`.
pub fn encode(g: &GeneralGrammar, target: GeneralKind) -> Result<GeneralGrammar, EncodeError> {
    match target {
        GeneralKind::Gnf42 => encode_gnf42(g),
        GeneralKind::Gnf32 => encode_gnf32(g),
        GeneralKind::Mmnf | GeneralKind::Smmnf | GeneralKind::Mmmnf => encode_mm(g, target),
        other => Err(EncodeError::UnsupportedTarget(other.token())),
    }
}
