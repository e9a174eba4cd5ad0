//! Pinned search caps for the bounded verification suites.
//!
//! Each form cap is the measured minimum at which the bounded language of
//! every fixture (or its encoding) reaches {lambda, a, aa, aaa, aaaa} at
//! word cap 4 and is fixed-point stable; the tests below keep them tight.

use scm_core::GeneralKind;

/// Word cap for the encoder-soundness comparisons.
pub const ENCODER_WORD_CAP: usize = 4;

/// Form cap at which the native block fixtures reach a^4 and stabilize.
pub const NATIVE_FORM_CAP: usize = 20;

/// Minimal stable form cap for enumerating either encoded fixture; `None`
/// for kinds no encoder targets.
pub fn encoder_form_cap(target: GeneralKind) -> Option<usize> {
    Some(match target {
        GeneralKind::Gnf42 => 52,
        GeneralKind::Gnf32 => 44,
        GeneralKind::Mmnf => 21,
        GeneralKind::Smmnf => 53,
        GeneralKind::Mmmnf => 21,
        GeneralKind::Type0 | GeneralKind::Gnf52 => return None,
    })
}

/// Encoder targets with a pinned cap, in declaration order.
pub const ENCODER_TARGETS: [GeneralKind; 5] = [
    GeneralKind::Gnf42,
    GeneralKind::Gnf32,
    GeneralKind::Mmnf,
    GeneralKind::Smmnf,
    GeneralKind::Mmmnf,
];
