//! The twisted very stable / wobbly decision procedure.
//!
//! A bundle `E` is `L`-very stable when the only nilpotent section of
//! `End E ⊗ L` is zero, and `L`-wobbly otherwise. Only statements that are
//! proved produce `VeryStable` or `Wobbly`; everything else is reported as
//! `Undetermined` together with the open statement it depends on.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::atiyah::{has_repeated_point, moduli_point};
use super::descriptor::{EllipticBundle, GZeroBundle, Indecomposable};
use super::pic::PicPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    VeryStable,
    Wobbly,
    Undetermined,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::VeryStable => "very_stable",
            Outcome::Wobbly => "wobbly",
            Outcome::Undetermined => "undetermined",
        })
    }
}

/// The statement a verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Citation {
    /// `End L = O`: a line bundle has no nonzero nilpotent Higgs field.
    LineBundle,
    /// On `P¹` with `t < 0`: very stable iff `|d_i - d_j| < -t`.
    ProjectiveLineCriterion,
    /// On `P¹` with `t ≥ 0` no bundle of rank ≥ 2 is very stable.
    ProjectiveLineNonNegativeTwist,
    /// Canonical twist on the elliptic curve: decided on the S-equivalence
    /// class (repeated moduli point iff wobbly).
    Theorem3Canonical,
    /// Degree-1 twist, `E ∈ E(2, 1)`: very stable iff `det E ≠ L`.
    Theorem3DegreeOneRankTwo,
    /// Stable bundles are wobbly for twists of degree ≥ 2.
    Theorem3HighTwist,
    /// `W(r, d, L) = M^ss(r, d)` for twists of degree ≥ 2.
    Corollary3HighTwist,
    /// Semistable and `deg L < 0` implies very stable.
    SemistableNegativeTwist,
    /// For `deg L ≥ 0` a very stable bundle is semistable.
    VeryStableImpliesSemistable,
    /// A nonzero map `E'' → E' ⊗ L` for `0 → E' → E → E'' → 0` gives a
    /// nilpotent field.
    ExactSequence,
    /// Degree-1 twist, `E ∈ E(d + 1, d)` whose point of `Pic¹` is `L`: the
    /// quotient by `I_d` is `L`.
    DeterminantEqualsTwist,
    /// Decomposable bundles: slope gaps, and for `deg L = 0` the rule
    /// `E_i ≅ E_j ⊗ L`.
    DecomposableCriterion,
    /// `F_r ⊗ M` with a degree-0 twist of order greater than `r`.
    DegreeZeroTwist,
    /// Open: the degree-0 twist remark does not settle this case.
    DegreeZeroTwistOpen,
    /// Open: mixed-slope sums with negative twist inside the slope bound.
    DecomposableOpen,
    /// Open: stable `E(d + 1, d)`, `d ≥ 2`, twist of degree 1 away from the
    /// point of `E`.
    Conjecture1,
}

impl Citation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Citation::LineBundle => "line bundle",
            Citation::ProjectiveLineCriterion => "Proposition P1",
            Citation::ProjectiveLineNonNegativeTwist => "P1, t >= 0",
            Citation::Theorem3Canonical => "Theorem 3(1)",
            Citation::Theorem3DegreeOneRankTwo => "Theorem 3(2)",
            Citation::Theorem3HighTwist => "Theorem 3(3)",
            Citation::Corollary3HighTwist => "Corollary 3(3)",
            Citation::SemistableNegativeTwist => "Lemma vst(1)",
            Citation::VeryStableImpliesSemistable => "Lemma vst(2)",
            Citation::ExactSequence => "Lemma exact",
            Citation::DeterminantEqualsTwist => "Lemma exact, det(E) = L",
            Citation::DecomposableCriterion => "Remark dec",
            Citation::DegreeZeroTwist => "Remark deg-0 twist",
            Citation::DegreeZeroTwistOpen => "Remark deg-0 twist — undetermined",
            Citation::DecomposableOpen => "Remark dec — undetermined",
            Citation::Conjecture1 => "Conjecture 1 — undetermined",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Citation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Verdict {
    #[serde(rename = "verdict")]
    pub outcome: Outcome,
    pub reason: Citation,
}

impl Verdict {
    fn very_stable(reason: Citation) -> Self {
        Verdict {
            outcome: Outcome::VeryStable,
            reason,
        }
    }

    fn wobbly(reason: Citation) -> Self {
        Verdict {
            outcome: Outcome::Wobbly,
            reason,
        }
    }

    fn undetermined(reason: Citation) -> Self {
        Verdict {
            outcome: Outcome::Undetermined,
            reason,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.outcome, self.reason)
    }
}

/// Classify `O(d_1) ⊕ … ⊕ O(d_r)` on `P¹` for the twist `O(t)`.
pub fn classify_p1(e: &GZeroBundle, t: i64) -> Verdict {
    if e.rank() == 1 {
        Verdict::very_stable(Citation::LineBundle)
    } else if t >= 0 {
        Verdict::wobbly(Citation::ProjectiveLineNonNegativeTwist)
    } else if e.spread() < -t {
        Verdict::very_stable(Citation::ProjectiveLineCriterion)
    } else {
        Verdict::wobbly(Citation::ProjectiveLineCriterion)
    }
}

/// Classify a bundle on the elliptic curve for the twist `twist`.
pub fn classify_elliptic(e: &EllipticBundle, twist: &PicPoint) -> Verdict {
    if e.rank() == 1 {
        return Verdict::very_stable(Citation::LineBundle);
    }
    let (e, _) = e.normalize_degree();
    let parts = e.indecomposable_parts();
    let semistable = e.is_semistable();

    match twist.degree() {
        l if l < 0 => {
            if semistable {
                return Verdict::very_stable(Citation::SemistableNegativeTwist);
            }
            let max = parts.iter().map(Indecomposable::slope).max().unwrap();
            let min = parts.iter().map(Indecomposable::slope).min().unwrap();
            // deg(E_i^* ⊗ E_j ⊗ L) > 0 for the extreme pair.
            if max - min > (-l).into() {
                Verdict::wobbly(Citation::DecomposableCriterion)
            } else {
                Verdict::undetermined(Citation::DecomposableOpen)
            }
        }
        l if !semistable => {
            debug_assert!(l >= 0);
            Verdict::wobbly(Citation::VeryStableImpliesSemistable)
        }
        l if l >= 2 => {
            if parts.len() == 1 && parts[0].is_stable() {
                Verdict::wobbly(Citation::Theorem3HighTwist)
            } else {
                Verdict::wobbly(Citation::Corollary3HighTwist)
            }
        }
        1 => classify_degree_one(&e, &parts, twist),
        _ if twist.is_trivial() => {
            let points = moduli_point(&e).expect("semistable");
            if has_repeated_point(&points) {
                Verdict::wobbly(Citation::Theorem3Canonical)
            } else {
                Verdict::very_stable(Citation::Theorem3Canonical)
            }
        }
        _ => classify_degree_zero_nontrivial(&e, &parts, twist),
    }
}

/// Semistable `E` with `0 ≤ deg E < rank E` and a twist of degree 1.
fn classify_degree_one(e: &EllipticBundle, parts: &[Indecomposable], twist: &PicPoint) -> Verdict {
    if parts.len() >= 2 {
        // Equal slopes: Hom(E_j, E_i ⊗ L) is semistable of degree r_i r_j > 0,
        // so the off-diagonal block carries a nonzero nilpotent field.
        return Verdict::wobbly(Citation::ExactSequence);
    }
    let p = &parts[0];
    let (r, d) = (p.rank() as i64, p.degree());
    if r > d + 1 {
        return Verdict::wobbly(Citation::ExactSequence);
    }
    debug_assert_eq!(r, d + 1);
    // E(d + 1, d) ≅ X ≅ Pic¹ through the moduli point; for d = 1 this is
    // det E itself.
    let point = moduli_point(e).expect("indecomposable is semistable");
    let det_equals_twist = point[0] == *twist;
    match (r, det_equals_twist) {
        (2, true) => Verdict::wobbly(Citation::Theorem3DegreeOneRankTwo),
        (2, false) => Verdict::very_stable(Citation::Theorem3DegreeOneRankTwo),
        (_, true) => Verdict::wobbly(Citation::DeterminantEqualsTwist),
        (_, false) => Verdict::undetermined(Citation::Conjecture1),
    }
}

/// Semistable `E` and a nontrivial twist of degree 0.
fn classify_degree_zero_nontrivial(
    e: &EllipticBundle,
    parts: &[Indecomposable],
    twist: &PicPoint,
) -> Verdict {
    if parts.iter().all(Indecomposable::is_stable) {
        // Polystable: wobbly iff E_i ≅ E_j ⊗ L for some i ≠ j. A stable
        // summand E_A(r', d') ⊗ M is determined by A + r'·M.
        let points: Vec<PicPoint> = parts
            .iter()
            .map(|p| PicPoint::base_point().add(&p.twist().scale(p.rank() as i64)))
            .collect();
        let shift = twist.scale(parts[0].rank() as i64);
        let hit = (0..points.len()).any(|i| {
            (0..points.len()).any(|j| i != j && points[i] == points[j].add(&shift))
        });
        return if hit {
            Verdict::wobbly(Citation::DecomposableCriterion)
        } else {
            Verdict::very_stable(Citation::DecomposableCriterion)
        };
    }
    if let EllipticBundle::Indecomposable(p) = e {
        if p.degree() == 0 && twist.torsion_order() > BigInt::from(p.rank()) {
            return Verdict::very_stable(Citation::DegreeZeroTwist);
        }
    }
    Verdict::undetermined(Citation::DegreeZeroTwistOpen)
}
