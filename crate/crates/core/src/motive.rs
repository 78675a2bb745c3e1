//! Grothendieck-ring arithmetic in `ℤ[𝕃]` and class propagation along the
//! semimodule tree.
//!
//! Each tree edge `Δ → m(Δ)` scales the cell class by `𝕃^(C₁ - C₂)`, where
//! `C₁` counts minimal generators of `Δ` below the Frobenius element and `C₂`
//! counts minimal generators of `Syz(Δ)` below it. Cell classes start from 1
//! at the (implicit) colength-0 root and stay single monomials; level sums
//! give the coefficients of the zeta function, which stabilize at the
//! conductor.

use std::ops::{Add, AddAssign};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{MonomialForm, NumericalSemigroup};
use crate::semimodule::GammaSemimodule;
use crate::tree::{build_tree, SemimoduleTree};

/// A polynomial in `𝕃` (the class of the affine line) with integer
/// coefficients, stored densely by ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LPolynomial {
    coeffs: Vec<i64>,
}

impl LPolynomial {
    pub fn zero() -> Self {
        LPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LPolynomial { coeffs: vec![1] }
    }

    /// The monomial `𝕃^k`.
    pub fn l_power(k: u64) -> Self {
        let mut coeffs = vec![0; k as usize + 1];
        coeffs[k as usize] = 1;
        LPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        LPolynomial { coeffs }
    }

    /// Coefficients by ascending degree.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// `Some(d)` iff the polynomial is exactly `𝕃^d`.
    pub fn as_unit_monomial(&self) -> Option<u64> {
        let d = self.degree()?;
        if self.coeffs[d] == 1 && self.coeffs[..d].iter().all(|&c| c == 0) {
            Some(d as u64)
        } else {
            None
        }
    }

    /// Multiply by `𝕃^k` with `k` possibly negative; `None` when a negative
    /// shift would truncate a nonzero coefficient.
    pub fn shifted(&self, k: i64) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if k >= 0 {
            let mut coeffs = vec![0; k as usize];
            coeffs.extend_from_slice(&self.coeffs);
            Some(LPolynomial { coeffs })
        } else {
            let down = (-k) as usize;
            if self.low_degree().map(|l| l < down).unwrap_or(false) {
                return None;
            }
            Some(LPolynomial {
                coeffs: self.coeffs[down..].to_vec(),
            })
        }
    }

    /// Evaluate at an integer point with checked arithmetic.
    pub fn evaluate(&self, x: i64) -> Result<i64> {
        let overflow = Error::Overflow {
            context: "polynomial evaluation",
        };
        let mut acc: i64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x)
                .and_then(|a| a.checked_add(c))
                .ok_or(overflow.clone())?;
        }
        Ok(acc)
    }

    fn term_plain(coeff: i64, degree: usize) -> String {
        match (coeff, degree) {
            (c, 0) => c.to_string(),
            (1, 1) => "L".to_string(),
            (-1, 1) => "-L".to_string(),
            (c, 1) => format!("{c}L"),
            (1, d) => format!("L^{d}"),
            (-1, d) => format!("-L^{d}"),
            (c, d) => format!("{c}L^{d}"),
        }
    }

    /// LaTeX rendering with `\mathbb{L}`, matching the display conventions
    /// used for the class tables (no space before `+` after an exponent).
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        let mut prev_had_exponent = false;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            let body = match (magnitude, d) {
                (m, 0) => m.to_string(),
                (1, 1) => "\\mathbb{L}".to_string(),
                (m, 1) => format!("{m}\\mathbb{{L}}"),
                (1, _) => format!("\\mathbb{{L}}^{{{d}}}"),
                (m, _) => format!("{m}\\mathbb{{L}}^{{{d}}}"),
            };
            if first {
                if c < 0 {
                    out.push('-');
                }
                out.push_str(&body);
                first = false;
            } else if c < 0 {
                out.push_str(" - ");
                out.push_str(&body);
            } else if prev_had_exponent {
                out.push_str("+ ");
                out.push_str(&body);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
            prev_had_exponent = d >= 2;
        }
        out
    }
}

impl std::fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                write!(f, "{}", Self::term_plain(c, d))?;
                first = false;
            } else if c < 0 {
                write!(f, " - {}", Self::term_plain(-c, d))?;
            } else {
                write!(f, " + {}", Self::term_plain(c, d))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&LPolynomial> for LPolynomial {
    fn add_assign(&mut self, rhs: &LPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] = self.coeffs[i]
                .checked_add(c)
                .expect("coefficient overflow");
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl Add<&LPolynomial> for &LPolynomial {
    type Output = LPolynomial;
    fn add(self, rhs: &LPolynomial) -> LPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

/// Whether the class-relation hypothesis is certified for a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Applicability {
    /// The semigroup matches one of the closed monomial forms.
    CertifiedMonomial { form: MonomialForm },
    /// The semigroup is `<n, k>` with two generators.
    CertifiedTwoGenerated,
    /// `Γ = ℕ`: a smooth point, zeta is `1/(1-q)` by convention.
    Smooth,
    /// Neither monomial nor two-generated; the computation runs anyway and
    /// the output carries this warning.
    Uncertified,
}

impl Applicability {
    pub fn for_semigroup(semigroup: &NumericalSemigroup) -> Self {
        if semigroup.is_full() {
            return Applicability::Smooth;
        }
        let form = semigroup.classify_monomial();
        if form.is_monomial() {
            Applicability::CertifiedMonomial { form }
        } else if semigroup.generators().len() == 2 {
            Applicability::CertifiedTwoGenerated
        } else {
            Applicability::Uncertified
        }
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self, Applicability::Uncertified)
    }
}

impl std::fmt::Display for Applicability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Applicability::CertifiedMonomial { form } => {
                write!(f, "certified: monomial semigroup {form}")
            }
            Applicability::CertifiedTwoGenerated => {
                write!(f, "certified: two-generated semigroup")
            }
            Applicability::Smooth => write!(f, "smooth point"),
            Applicability::Uncertified => write!(
                f,
                "UNCERTIFIED: semigroup is neither monomial nor two-generated; \
                 the class relation is not proven for it"
            ),
        }
    }
}

/// Exponent of `𝕃` on the edge `Δ → m(Δ)`: generators of `Δ` below `γ_Δ`
/// minus generators of `Syz(Δ)` below `γ_Δ`.
pub fn class_exponent(module: &GammaSemimodule) -> Result<i64> {
    let frobenius = module.frobenius_element()?;
    let c1 = module
        .minimal_generators()?
        .iter()
        .filter(|&&g| g < frobenius)
        .count() as i64;
    let syzygy = module.syzygy()?;
    let c2 = syzygy
        .min_gens
        .iter()
        .filter(|&&s| s < frobenius)
        .count() as i64;
    Ok(c1 - c2)
}

/// Cell classes per tree node plus their level sums.
#[derive(Debug, Clone)]
pub struct MotivicClassTable {
    cells: Vec<Vec<LPolynomial>>,
    level_classes: Vec<LPolynomial>,
}

impl MotivicClassTable {
    /// Class of node `i` at colength `ell` (1-based, tree order).
    pub fn cell_class(&self, ell: usize, i: usize) -> &LPolynomial {
        &self.cells[ell - 1][i]
    }

    pub fn cells(&self) -> &[Vec<LPolynomial>] {
        &self.cells
    }

    /// `[C^[ell]] = Σ_{Δ} [C^[Δ]]` over the level.
    pub fn level_class(&self, ell: usize) -> &LPolynomial {
        &self.level_classes[ell - 1]
    }

    pub fn level_classes(&self) -> &[LPolynomial] {
        &self.level_classes
    }

    /// Every cell class is a plain power of `𝕃`.
    pub fn monomial_cells(&self) -> bool {
        self.cells
            .iter()
            .all(|level| level.iter().all(|c| c.as_unit_monomial().is_some()))
    }
}

/// Propagate classes through the tree, level by level, starting from 1 at the
/// implicit colength-0 root.
pub fn compute_classes(tree: &SemimoduleTree) -> Result<MotivicClassTable> {
    let mut cells: Vec<Vec<LPolynomial>> = Vec::with_capacity(tree.depth());
    let mut level_classes = Vec::with_capacity(tree.depth());
    for ell in 1..=tree.depth() {
        let level = tree.level(ell);
        let mut row = Vec::with_capacity(level.len());
        let mut sum = LPolynomial::zero();
        for (i, node) in level.iter().enumerate() {
            let exponent = class_exponent(node)?;
            let parent_class = match tree.parent_index(ell, i) {
                None => LPolynomial::one(),
                Some(p) => cells[ell - 2][p].clone(),
            };
            let cell = parent_class.shifted(exponent).ok_or_else(|| {
                let low = parent_class.low_degree().unwrap_or(0) as i64;
                Error::NegativeExponentUnderflow {
                    gaps: node.canonical_key(),
                    exponent: low + exponent,
                }
            })?;
            sum += &cell;
            row.push(cell);
        }
        cells.push(row);
        level_classes.push(sum);
    }
    Ok(MotivicClassTable {
        cells,
        level_classes,
    })
}

/// The motivic Hilbert zeta function as a rational function of `q`:
/// the polynomial part `Σ_{ℓ<c} p_ℓ q^ℓ` plus `tail · q^c / (1-q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertZeta {
    poly_coeffs: Vec<LPolynomial>,
    tail: LPolynomial,
    applicability: Applicability,
}

impl HilbertZeta {
    /// Coefficients of `q^0 .. q^{c-1}`; empty for a smooth point.
    pub fn poly_coeffs(&self) -> &[LPolynomial] {
        &self.poly_coeffs
    }

    /// The stabilized coefficient of `q^ℓ` for every `ℓ >= c`.
    pub fn tail(&self) -> &LPolynomial {
        &self.tail
    }

    pub fn applicability(&self) -> Applicability {
        self.applicability
    }

    /// Conductor implied by the stored polynomial part.
    pub fn conductor(&self) -> usize {
        self.poly_coeffs.len()
    }

    /// Coefficient of `q^ell` for any `ell`.
    pub fn coefficient(&self, ell: usize) -> &LPolynomial {
        self.poly_coeffs.get(ell).unwrap_or(&self.tail)
    }
}

/// Run the whole pipeline for a semigroup: build the tree, propagate classes,
/// assemble the zeta function.
pub fn zeta(semigroup: &Arc<NumericalSemigroup>) -> Result<HilbertZeta> {
    let applicability = Applicability::for_semigroup(semigroup);
    if semigroup.is_full() {
        return Ok(HilbertZeta {
            poly_coeffs: Vec::new(),
            tail: LPolynomial::one(),
            applicability,
        });
    }
    let tree = build_tree(semigroup)?;
    let table = compute_classes(&tree)?;
    let c = semigroup.conductor() as usize;
    let mut poly_coeffs = Vec::with_capacity(c);
    poly_coeffs.push(LPolynomial::one());
    for ell in 1..c {
        poly_coeffs.push(table.level_class(ell).clone());
    }
    Ok(HilbertZeta {
        poly_coeffs,
        tail: table.level_class(c).clone(),
        applicability,
    })
}

/// JSON document for the zeta command.
#[derive(Serialize)]
pub struct ZetaDocument {
    pub schema_version: u32,
    pub generators: Vec<u64>,
    pub conductor: u64,
    pub delta: u64,
    pub classification: MonomialForm,
    pub applicability: Applicability,
    pub certified: bool,
    pub bound: u64,
    pub effective_bound: u64,
    pub classes: Vec<LevelClassEntry>,
    pub zeta: ZetaRational,
}

#[derive(Serialize)]
pub struct LevelClassEntry {
    pub ell: usize,
    pub coeffs: Vec<i64>,
}

#[derive(Serialize)]
pub struct ZetaRational {
    pub poly: Vec<LPolynomial>,
    pub tail: LPolynomial,
}

impl ZetaDocument {
    pub fn new(semigroup: &NumericalSemigroup, z: &HilbertZeta) -> Self {
        let classes = (1..=z.conductor())
            .map(|ell| LevelClassEntry {
                ell,
                coeffs: z.coefficient(ell).coeffs().to_vec(),
            })
            .collect();
        ZetaDocument {
            schema_version: 1,
            generators: semigroup.generators().to_vec(),
            conductor: semigroup.conductor(),
            delta: semigroup.delta(),
            classification: semigroup.classify_monomial(),
            applicability: z.applicability(),
            certified: semigroup.certified(),
            bound: semigroup.bound(),
            effective_bound: semigroup.effective_bound(),
            classes,
            zeta: ZetaRational {
                poly: z.poly_coeffs().to_vec(),
                tail: z.tail().clone(),
            },
        }
    }
}

/// LaTeX document: the class table in an aligned block followed by the zeta
/// function in closed form.
pub fn latex_document(semigroup: &NumericalSemigroup, z: &HilbertZeta) -> String {
    if semigroup.is_full() {
        return "\\[\nZ^{Hilb}_{(C,O)}(q) = \\frac{1}{1-q}\n\\]\n".to_string();
    }
    let c = z.conductor();
    let mut out = String::new();
    out.push_str("\\[\n\\begin{aligned}\n");
    for ell in 1..=c {
        let prefix = if ell == 1 { "\\relax " } else { "" };
        out.push_str(&format!(
            "{prefix}[C^{{[{ell}]}}] &= {}\\\\\n",
            z.coefficient(ell).latex()
        ));
    }
    out.push_str("\\end{aligned}\n\\]\n\\[\n");
    if c == 1 {
        out.push_str("Z^{Hilb}_{(C,O)}(q) = 1+[C^{[1]}](q^{1}+q^{2}+\\dots)\n");
    } else {
        out.push_str(&format!(
            "Z^{{Hilb}}_{{(C,O)}}(q) = 1+\\sum_{{\\ell=1}}^{{{}}}[C^{{[\\ell]}}]q^{{\\ell}}+[C^{{[{c}]}}](q^{{{c}}}+q^{{{}}}+\\dots)\n",
            c - 1,
            c + 1
        ));
    }
    out.push_str("\\]\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semimodule::GammaSemimodule;

    fn sg(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    fn lp(coeffs: &[i64]) -> LPolynomial {
        LPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = lp(&[1, 2]);
        let b = lp(&[0, 1, 3]);
        assert_eq!(&a + &b, lp(&[1, 3, 3]));
        assert_eq!(LPolynomial::l_power(2), lp(&[0, 0, 1]));
        assert_eq!(lp(&[1, 1]).shifted(2).unwrap(), lp(&[0, 0, 1, 1]));
        assert_eq!(lp(&[0, 0, 1]).shifted(-2).unwrap(), lp(&[1]));
        assert_eq!(lp(&[0, 1]).shifted(-2), None);
        assert_eq!(lp(&[1, 1, 2]).evaluate(1).unwrap(), 4);
        assert_eq!(lp(&[1, 1, 2]).evaluate(2).unwrap(), 11);
        assert_eq!(LPolynomial::from_coeffs(vec![0, 0]), LPolynomial::zero());
        assert_eq!(lp(&[0, 0, 1]).as_unit_monomial(), Some(2));
        assert_eq!(lp(&[0, 2]).as_unit_monomial(), None);
        assert_eq!(lp(&[1, 0, 1]).as_unit_monomial(), None);
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(lp(&[1, 1, 2, 3, 2]).to_string(), "1 + L + 2L^2 + 3L^3 + 2L^4");
        assert_eq!(lp(&[]).to_string(), "0");
        assert_eq!(lp(&[0, 1]).to_string(), "L");
        assert_eq!(lp(&[2, -1]).to_string(), "2 - L");
    }

    #[test]
    fn polynomial_latex() {
        assert_eq!(
            lp(&[1, 1, 2, 3, 2]).latex(),
            "1 + \\mathbb{L} + 2\\mathbb{L}^{2}+ 3\\mathbb{L}^{3}+ 2\\mathbb{L}^{4}"
        );
        assert_eq!(lp(&[1, 1, 1]).latex(), "1 + \\mathbb{L} + \\mathbb{L}^{2}");
        assert_eq!(lp(&[1]).latex(), "1");
        assert_eq!(lp(&[0, 2]).latex(), "2\\mathbb{L}");
    }

    #[test]
    fn class_exponent_worked_example() {
        let s = sg(&[4, 7]);
        let d = GammaSemimodule::generated_by(&s, &[8, 11]).unwrap();
        assert_eq!(class_exponent(&d).unwrap(), 1);
    }

    #[test]
    fn class_exponent_of_maximal_ideal_is_zero() {
        for s in [sg(&[2, 3]), sg(&[3, 4]), sg(&[4, 5, 6])] {
            let d1 = GammaSemimodule::maximal_ideal(&s);
            assert_eq!(class_exponent(&d1).unwrap(), 0);
        }
    }

    #[test]
    fn class_exponent_of_principal_module() {
        let s = sg(&[2, 3]);
        let d = GammaSemimodule::generated_by(&s, &[2]).unwrap();
        assert_eq!(d.frobenius_element().unwrap(), 3);
        assert_eq!(class_exponent(&d).unwrap(), 1);
        assert_eq!(
            class_exponent(&GammaSemimodule::full(&s)).unwrap_err(),
            Error::FullModule
        );
    }

    #[test]
    fn classes_of_4_5_6_spot_checks() {
        let s = sg(&[4, 5, 6]);
        let tree = build_tree(&s).unwrap();
        let table = compute_classes(&tree).unwrap();
        assert_eq!(table.level_class(1), &lp(&[1]));
        assert_eq!(table.level_class(2), &lp(&[1, 1, 1]));
        assert_eq!(table.level_class(8), &lp(&[1, 1, 2, 3, 2]));
        assert!(table.monomial_cells());
    }

    #[test]
    fn classes_of_2_3() {
        let s = sg(&[2, 3]);
        let table = compute_classes(&build_tree(&s).unwrap()).unwrap();
        assert_eq!(table.level_class(1), &lp(&[1]));
        assert_eq!(table.level_class(2), &lp(&[1, 1]));
    }

    #[test]
    fn euler_specialization() {
        for s in [sg(&[2, 3]), sg(&[3, 4]), sg(&[4, 5, 6]), sg(&[3, 4, 5])] {
            let tree = build_tree(&s).unwrap();
            let table = compute_classes(&tree).unwrap();
            for (ell, chi) in tree.euler_numbers().into_iter().enumerate() {
                assert_eq!(
                    table.level_class(ell + 1).evaluate(1).unwrap(),
                    chi as i64,
                    "level {} of {:?}",
                    ell + 1,
                    s.generators()
                );
            }
        }
    }

    #[test]
    fn zeta_of_smooth_point() {
        let z = zeta(&sg(&[1])).unwrap();
        assert!(z.poly_coeffs().is_empty());
        assert_eq!(z.tail(), &LPolynomial::one());
        assert_eq!(z.applicability(), Applicability::Smooth);
    }

    #[test]
    fn zeta_of_cusp_family() {
        let z = zeta(&sg(&[2, 3])).unwrap();
        assert_eq!(z.poly_coeffs(), &[lp(&[1]), lp(&[1])]);
        assert_eq!(z.tail(), &lp(&[1, 1]));
        assert!(matches!(
            z.applicability(),
            Applicability::CertifiedMonomial { .. }
        ));
    }

    #[test]
    fn applicability_flags() {
        assert!(matches!(
            Applicability::for_semigroup(&sg(&[4, 7])),
            Applicability::CertifiedTwoGenerated
        ));
        assert!(matches!(
            Applicability::for_semigroup(&sg(&[4, 5, 6])),
            Applicability::CertifiedMonomial {
                form: MonomialForm::Mr { m: 4, r: 3 }
            }
        ));
        // <5,7,9> is neither monomial nor two-generated.
        let s = sg(&[5, 7, 9]);
        assert_eq!(Applicability::for_semigroup(&s), Applicability::Uncertified);
        assert!(!Applicability::Uncertified.is_certified());
    }

    #[test]
    fn latex_document_contains_the_class_table() {
        let s = sg(&[4, 5, 6]);
        let z = zeta(&s).unwrap();
        let doc = latex_document(&s, &z);
        assert!(doc.contains(
            "1 + \\mathbb{L} + 2\\mathbb{L}^{2}+ 3\\mathbb{L}^{3}+ 2\\mathbb{L}^{4}"
        ));
        assert!(doc.contains("Z^{Hilb}_{(C,O)}(q)"));
        assert!(latex_document(&sg(&[1]), &zeta(&sg(&[1])).unwrap())
            .contains("\\frac{1}{1-q}"));
    }

    #[test]
    fn zeta_document_shape() {
        let s = sg(&[2, 3]);
        let z = zeta(&s).unwrap();
        let doc = ZetaDocument::new(&s, &z);
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["conductor"], 2);
        assert_eq!(json["classes"][0]["ell"], 1);
        assert_eq!(json["zeta"]["poly"][0][0], 1);
        assert_eq!(json["zeta"]["tail"][1], 1);
    }
}
