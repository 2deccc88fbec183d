//! Ribbon 2-knots in normal form, handle counts of their complements and of
//! the Gluck twist, and the two-parameter family `K_pq`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coset::{certify_trivial, Triviality};
use crate::error::{AlgebraError, Error, ModelError};
use crate::fox::{alexander_polynomial, is_knot_like, AlexanderResult, Principality};
use crate::laurent::LaurentPolynomial;
use crate::presentation::Presentation;
use crate::word::{parse_word, Generator, Word};

/// Numbers of 0- through 4-handles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[u64; 5]", into = "[u64; 5]")]
pub struct HandleCounts(pub [u64; 5]);

impl HandleCounts {
    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(k, &h)| if k % 2 == 0 { h as i64 } else { -(h as i64) }).sum()
    }

    pub fn get(&self, index: usize) -> u64 {
        self.0[index]
    }
}

impl From<[u64; 5]> for HandleCounts {
    fn from(h: [u64; 5]) -> Self {
        HandleCounts(h)
    }
}

impl From<HandleCounts> for [u64; 5] {
    fn from(h: HandleCounts) -> Self {
        h.0
    }
}

impl fmt::Display for HandleCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "({a},{b},{c},{d},{e})")
    }
}

/// Handle decomposition of the complement of a 2-knot whose hemispheres have
/// `m` and `n` ribbons: one 1-handle per dotted circle (`m + 1`), one
/// 2-handle per band, one 3-handle per 0-handle of the upper disk (`n + 1`),
/// and a 4-handle.
pub fn complement_handle_counts(m: u64, n: u64) -> Result<HandleCounts, ModelError> {
    if m == 0 || n == 0 {
        return Err(ModelError::InvalidKnot(format!("band counts must be positive, got ({m}, {n})")));
    }
    Ok(HandleCounts([1, m + 1, m + n, n + 1, 1]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GluckVariant {
    /// Blow down one dotted circle as a `±1`-framed unknot.
    SingleBlowDown,
    /// Blow down two dotted circles with framings `+1` and `-1`, adding a
    /// 3-handle and a 4-handle.
    DoubleBlowDown,
}

impl fmt::Display for GluckVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GluckVariant::SingleBlowDown => "single",
            GluckVariant::DoubleBlowDown => "double",
        })
    }
}

/// One step of the handle bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HandleMove {
    /// Attach a handle of the given index; 2-handles carry their framing.
    Attach { index: usize, framing: Option<i8> },
    /// Cancel a `k`-handle against a `(k+1)`-handle.
    Cancel { lower: usize },
}

impl fmt::Display for HandleMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HandleMove::Attach { index, framing: Some(fr) } => write!(f, "attach {index}-handle (framing {fr:+})"),
            HandleMove::Attach { index, framing: None } => write!(f, "attach {index}-handle"),
            HandleMove::Cancel { lower } => write!(f, "cancel {lower}/{}-pair", lower + 1),
        }
    }
}

/// The moves that turn a complement decomposition into one of the
/// Gluck-twisted sphere. `framing` is the sign used for the (first)
/// blow-down; it never affects the counts.
pub fn gluck_moves(variant: GluckVariant, framing: i8) -> Vec<HandleMove> {
    let framing = if framing < 0 { -1 } else { 1 };
    match variant {
        GluckVariant::SingleBlowDown => vec![
            HandleMove::Attach { index: 2, framing: Some(framing) },
            HandleMove::Attach { index: 4, framing: None },
            HandleMove::Cancel { lower: 3 },
            HandleMove::Cancel { lower: 1 },
        ],
        GluckVariant::DoubleBlowDown => vec![
            HandleMove::Attach { index: 2, framing: Some(framing) },
            HandleMove::Attach { index: 2, framing: Some(-framing) },
            HandleMove::Attach { index: 3, framing: None },
            HandleMove::Attach { index: 4, framing: None },
            HandleMove::Cancel { lower: 3 },
            HandleMove::Cancel { lower: 1 },
            HandleMove::Cancel { lower: 1 },
        ],
    }
}

/// Applies moves in order; `None` if a cancellation has nothing to cancel.
pub fn apply_moves(c: HandleCounts, moves: &[HandleMove]) -> Option<HandleCounts> {
    let mut h = c.0;
    for m in moves {
        match *m {
            HandleMove::Attach { index, .. } => h[index] += 1,
            HandleMove::Cancel { lower } => {
                if h[lower] == 0 || h[lower + 1] == 0 {
                    return None;
                }
                h[lower] -= 1;
                h[lower + 1] -= 1;
            }
        }
    }
    Some(HandleCounts(h))
}

/// Net effect of the Gluck twist on handle counts: single
/// `(h0, h1-1, h2, h3-1, h4)`, double `(h0, h1-2, h2, h3, h4)`.
pub fn gluck_handle_counts(c: HandleCounts, variant: GluckVariant) -> Result<HandleCounts, ModelError> {
    apply_moves(c, &gluck_moves(variant, 1)).ok_or_else(|| ModelError::InsufficientHandles {
        variant: variant.to_string(),
        needed: match variant {
            GluckVariant::SingleBlowDown => 1,
            GluckVariant::DoubleBlowDown => 2,
        },
        counts: c.to_string(),
    })
}

/// A 2-knot in normal form: `m` fusion bands below the equator, `n` fission
/// bands above it, and the `π₁` data of its complement. Generators are the
/// meridians of the `m + 1` dotted circles; there is one relator per band.
/// Relators may be empty when a band's 2-handle is trivial in `π₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonTwoKnot {
    label: String,
    lower_bands: usize,
    upper_bands: usize,
    names: Vec<String>,
    relators: Vec<Word>,
    meridians: Vec<Generator>,
}

impl RibbonTwoKnot {
    pub fn new(
        label: impl Into<String>,
        lower_bands: usize,
        upper_bands: usize,
        names: Vec<String>,
        relators: Vec<Word>,
        meridians: Vec<Generator>,
    ) -> Result<Self, ModelError> {
        let invalid = |msg: String| Err(ModelError::InvalidKnot(msg));
        if lower_bands == 0 || upper_bands == 0 {
            return invalid(format!("band counts must be positive, got ({lower_bands}, {upper_bands})"));
        }
        if names.len() != lower_bands + 1 {
            return invalid(format!("{} generators for {lower_bands} lower bands", names.len()));
        }
        if relators.len() != lower_bands + upper_bands {
            return invalid(format!("{} relators for {} bands", relators.len(), lower_bands + upper_bands));
        }
        if meridians.is_empty() || meridians.iter().any(|g| g.0 >= names.len()) {
            return invalid("meridians must be a nonempty set of generators".into());
        }
        Presentation::new(names.clone(), relators.clone()).map_err(|e| ModelError::InvalidKnot(e.to_string()))?;
        Ok(RibbonTwoKnot { label: label.into(), lower_bands, upper_bands, names, relators, meridians })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn bands(&self) -> (usize, usize) {
        (self.lower_bands, self.upper_bands)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridians(&self) -> &[Generator] {
        &self.meridians
    }

    pub fn handle_counts(&self) -> HandleCounts {
        complement_handle_counts(self.lower_bands as u64, self.upper_bands as u64).expect("validated")
    }
}

/// `π₁` of the complement; 3- and 4-handles add no relations. Rejected unless
/// the first homology is `Z`.
pub fn complement_presentation(k: &RibbonTwoKnot) -> Result<Presentation, ModelError> {
    let relators = k.relators.iter().filter(|r| !r.is_empty()).cloned().collect();
    let p = Presentation::new(k.names.clone(), relators).map_err(|e| ModelError::InvalidKnot(e.to_string()))?;
    let h1 = p.abelianization();
    if !h1.is_infinite_cyclic() {
        return Err(ModelError::HomologyNotZ(h1.to_string()));
    }
    Ok(p)
}

/// `π₁` of the Gluck-twisted sphere: the new 2-handle runs once over the
/// dotted circle of `meridian` and kills it. Framing plays no role here.
pub fn gluck_quotient(k: &RibbonTwoKnot, meridian: Generator) -> Result<Presentation, ModelError> {
    if !k.meridians.contains(&meridian) {
        let name = k.names.get(meridian.0).cloned().unwrap_or_else(|| format!("#{}", meridian.0));
        return Err(ModelError::NotAMeridian(name));
    }
    Ok(complement_presentation(k)?.kill_generator(meridian))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityClass {
    #[serde(rename = "EE")]
    EvenEven,
    #[serde(rename = "OO")]
    OddOdd,
    #[serde(rename = "OE")]
    OddEven,
    #[serde(rename = "EO")]
    EvenOdd,
}

impl ParityClass {
    pub fn of(p: i64, q: i64) -> Self {
        match (p.rem_euclid(2), q.rem_euclid(2)) {
            (0, 0) => ParityClass::EvenEven,
            (1, 1) => ParityClass::OddOdd,
            (1, 0) => ParityClass::OddEven,
            _ => ParityClass::EvenOdd,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            ParityClass::EvenEven => "EE",
            ParityClass::OddOdd => "OO",
            ParityClass::OddEven => "OE",
            ParityClass::EvenOdd => "EO",
        }
    }

    /// Parities as an unordered pair.
    pub fn unordered(&self) -> (u8, u8) {
        match self {
            ParityClass::EvenEven => (0, 0),
            ParityClass::OddOdd => (1, 1),
            ParityClass::OddEven | ParityClass::EvenOdd => (0, 1),
        }
    }

    pub fn all() -> [ParityClass; 4] {
        [ParityClass::EvenEven, ParityClass::OddOdd, ParityClass::OddEven, ParityClass::EvenOdd]
    }

    /// A `(p, q)` with this parity.
    pub fn representative(&self) -> (i64, i64) {
        match self {
            ParityClass::EvenEven => (0, 0),
            ParityClass::OddOdd => (1, 1),
            ParityClass::OddEven => (1, 0),
            ParityClass::EvenOdd => (0, 1),
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

const FAMILY_NAMES: [&str; 2] = ["x", "y"];

fn family_names() -> Vec<String> {
    FAMILY_NAMES.iter().map(|s| s.to_string()).collect()
}

/// The relator of `π₁` of the complement of `K_pq`; only the parities of
/// `p` and `q` matter.
pub fn family_relator(p: i64, q: i64) -> Word {
    let text = match ParityClass::of(p, q) {
        ParityClass::EvenEven => "xyxy^-1x^-1yxyx^-1y^-1",
        ParityClass::OddOdd => "xyxyx^-1y^-1xy^-1x^-1y^-1",
        ParityClass::OddEven => "xyxy^-1x^-1y^-1xyx^-1y^-1",
        ParityClass::EvenOdd => "xyxyx^-1yxy^-1x^-1y^-1",
    };
    parse_word(text, &family_names()).expect("well-formed family relator")
}

/// `K_pq`: one band in each hemisphere, two dotted circles with meridians
/// `x` and `y`. The second band's 2-handle is stored as the empty word.
pub fn family_knot(p: i64, q: i64) -> RibbonTwoKnot {
    RibbonTwoKnot::new(
        format!("K({p},{q})"),
        1,
        1,
        family_names(),
        vec![family_relator(p, q), Word::identity()],
        vec![Generator(0), Generator(1)],
    )
    .expect("valid family data")
}

/// `Δ` up to units and `t -> t^-1`: the smaller of the normal forms of `Δ`
/// and its reciprocal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaClass(LaurentPolynomial);

impl DeltaClass {
    pub fn of(d: &LaurentPolynomial) -> Result<Self, AlgebraError> {
        let a = d.normalize_unit()?;
        let b = d.reciprocal().normalize_unit()?;
        let key = |p: &LaurentPolynomial| p.terms().map(|(e, c)| (e, c.clone())).collect::<Vec<_>>();
        Ok(DeltaClass(if key(&a) <= key(&b) { a } else { b }))
    }

    pub fn representative(&self) -> &LaurentPolynomial {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub p: i64,
    pub q: i64,
    pub parity: ParityClass,
    pub alexander: AlexanderResult,
    pub class: DeltaClass,
}

impl Classification {
    /// Knots whose Alexander polynomials differ up to units and reciprocal.
    pub fn distinguished_from(&self, other: &Classification) -> bool {
        self.class != other.class
    }
}

pub fn classify(p: i64, q: i64) -> Result<Classification, Error> {
    let presentation = complement_presentation(&family_knot(p, q))?;
    let alexander = alexander_polynomial(&presentation)?;
    let class = DeltaClass::of(&alexander.polynomial)?;
    Ok(Classification { p, q, parity: ParityClass::of(p, q), alexander, class })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpunObstruction {
    #[serde(rename = "PossiblyOneKnot")]
    PossiblyOneKnotPolynomial,
    #[serde(rename = "NotOneKnot")]
    NotOneKnotPolynomial,
}

impl fmt::Display for SpunObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpunObstruction::PossiblyOneKnotPolynomial => "PossiblyOneKnot",
            SpunObstruction::NotOneKnotPolynomial => "NotOneKnot",
        })
    }
}

/// A spun knot has the Alexander polynomial of a classical knot, which is
/// symmetric with `|Δ(1)| = 1`.
pub fn spun_obstruction(d: &LaurentPolynomial) -> Result<SpunObstruction, AlgebraError> {
    if d.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok(if is_knot_like(d) {
        SpunObstruction::PossiblyOneKnotPolynomial
    } else {
        SpunObstruction::NotOneKnotPolynomial
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyHandleCounts {
    pub complement: HandleCounts,
    pub gluck_single: HandleCounts,
    pub gluck_double: HandleCounts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GluckPi1 {
    Trivial,
    Inconclusive,
}

/// Serialized invariants of one family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub p: i64,
    pub q: i64,
    pub parity: ParityClass,
    pub relator: String,
    pub delta: String,
    pub delta_principal: bool,
    pub h1: String,
    pub gluck_pi1: GluckPi1,
    pub handle_counts: FamilyHandleCounts,
    pub spun_obstruction: SpunObstruction,
}

/// All invariants of `K_pq`. `gluck_pi1` is trivial only if the quotient by
/// every meridian is certified trivial within `max_cosets`.
pub fn family_record(p: i64, q: i64, max_cosets: usize) -> Result<FamilyRecord, Error> {
    let knot = family_knot(p, q);
    let presentation = complement_presentation(&knot)?;
    let c = classify(p, q)?;
    let mut trivial = true;
    for &m in knot.meridians() {
        let t = certify_trivial(&gluck_quotient(&knot, m)?, max_cosets)?;
        trivial &= t == Triviality::Trivial;
    }
    let complement = knot.handle_counts();
    Ok(FamilyRecord {
        p,
        q,
        parity: c.parity,
        relator: presentation.word_to_string(&family_relator(p, q)),
        delta: c.alexander.polynomial.to_string(),
        delta_principal: c.alexander.principality == Principality::CertifiedPrincipal,
        h1: presentation.abelianization().to_string(),
        gluck_pi1: if trivial { GluckPi1::Trivial } else { GluckPi1::Inconclusive },
        handle_counts: FamilyHandleCounts {
            complement,
            gluck_single: gluck_handle_counts(complement, GluckVariant::SingleBlowDown)?,
            gluck_double: gluck_handle_counts(complement, GluckVariant::DoubleBlowDown)?,
        },
        spun_obstruction: spun_obstruction(&c.alexander.polynomial)?,
    })
}
