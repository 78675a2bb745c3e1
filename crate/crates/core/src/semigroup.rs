//! Numerical semigroups with cached membership tables.
//!
//! A numerical semigroup `Γ = <a_1,...,a_e>` is an additively closed subset
//! of the naturals containing 0 with finite complement. All downstream
//! computation (semimodules, trees, motivic classes) reduces to membership
//! queries against a table precomputed up to a bound that is at least the
//! effective bound `(c-1)(a_1+2)`, where `c` is the conductor.

use serde::Serialize;

use crate::error::{Error, Result};

/// A numerical semigroup, stored as its minimal generating system together
/// with a membership table over `[0, bound]`.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    conductor: u64,
    gaps: Vec<u64>,
    membership: Vec<bool>,
}

/// Classification of a semigroup against the three closed monomial forms.
///
/// The parameters follow the shapes
/// `{im : 0 <= i <= s} ∪ [sm+b, ∞)`, `{0} ∪ [m, m+r-1] ∪ [m+r+1, ∞)` and
/// `{0, m} ∪ [m+2, 2m] ∪ [2m+2, ∞)` respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum MonomialForm {
    Msb { m: u64, s: u64, b: u64 },
    Mr { m: u64, r: u64 },
    M { m: u64 },
    NotMonomial,
}

impl MonomialForm {
    pub fn is_monomial(&self) -> bool {
        !matches!(self, MonomialForm::NotMonomial)
    }
}

impl std::fmt::Display for MonomialForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialForm::Msb { m, s, b } => write!(f, "Gamma_{{{m},{s},{b}}}"),
            MonomialForm::Mr { m, r } => write!(f, "Gamma_{{{m},{r}}}"),
            MonomialForm::M { m } => write!(f, "Gamma_{{{m}}}"),
            MonomialForm::NotMonomial => write!(f, "not monomial"),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Sieve membership of the semigroup generated by `gens` over `[0, bound]`.
fn sieve(gens: &[u64], bound: u64) -> Vec<bool> {
    let len = bound as usize + 1;
    let mut table = vec![false; len];
    table[0] = true;
    for n in 1..len {
        table[n] = gens
            .iter()
            .any(|&g| g as usize <= n && table[n - g as usize]);
    }
    table
}

/// Find the conductor by sieving with a doubling bound until a run of
/// `multiplicity` consecutive members appears; from that point on every
/// integer is a member.
fn find_conductor(gens: &[u64], multiplicity: u64) -> Result<u64> {
    let max_gen = *gens.iter().max().expect("nonempty");
    let mut bound = (4 * max_gen).max(64);
    loop {
        let table = sieve(gens, bound);
        let mut run = 0u64;
        for (n, &m) in table.iter().enumerate() {
            if m {
                run += 1;
                if run == multiplicity {
                    return Ok(n as u64 + 1 - multiplicity);
                }
            } else {
                run = 0;
            }
        }
        bound = bound
            .checked_mul(2)
            .filter(|&b| b <= 1 << 40)
            .ok_or(Error::Overflow {
                context: "conductor search bound",
            })?;
    }
}

impl NumericalSemigroup {
    /// Build the semigroup generated by `gens`, with the membership table
    /// sized to the effective bound `(c-1)(a_1+2)`.
    ///
    /// The input is reduced to the minimal generating system.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        Self::from_generators_with_bound(gens, 0)
    }

    /// Like [`from_generators`](Self::from_generators) but with the table
    /// sized to `max(bound, effective bound)`.
    pub fn from_generators_with_bound(gens: &[u64], bound: u64) -> Result<Self> {
        Self::build(gens, bound, false)
    }

    /// Build with the table truncated to exactly `bound`, which may be below
    /// the effective bound. Downstream operations whose correctness cannot be
    /// certified against such a table fail with [`Error::BoundTooSmall`].
    ///
    /// The conductor, gaps and minimal generators are always exact.
    pub fn from_generators_truncated(gens: &[u64], bound: u64) -> Result<Self> {
        Self::build(gens, bound, true)
    }

    fn build(gens: &[u64], requested_bound: u64, truncate: bool) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }

        let mut input: Vec<u64> = gens.to_vec();
        input.sort_unstable();
        input.dedup();
        let multiplicity = input[0];

        let conductor = find_conductor(&input, multiplicity)?;
        let effective = effective_bound_for(conductor, multiplicity)?;
        let bound = if truncate {
            requested_bound
        } else {
            requested_bound
                .max(effective)
                .max(*input.last().unwrap())
                .max(8)
        };

        // Sieve far enough to read off gaps and minimal generators even when
        // the stored table is truncated below the conductor.
        let sieve_bound = bound.max(conductor + multiplicity);
        let mut membership = sieve(&input, sieve_bound);

        let gaps: Vec<u64> = (0..conductor)
            .filter(|&n| !membership[n as usize])
            .collect();

        // Minimal generating system: nonzero members that are not a sum of
        // two nonzero members. Every minimal generator is < c + a_1.
        let mut generators = Vec::new();
        for n in 1..=(conductor + multiplicity) {
            if !membership[n as usize] {
                continue;
            }
            let decomposable =
                (1..n).any(|a| membership[a as usize] && membership[(n - a) as usize]);
            if !decomposable {
                generators.push(n);
            }
        }

        membership.truncate(bound as usize + 1);
        Ok(NumericalSemigroup {
            generators,
            conductor,
            gaps,
            membership,
        })
    }

    /// The minimal generating system, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The conductor `c = min{n : [n, ∞) ⊆ Γ}`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The gaps `ℕ \ Γ`, ascending.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// The delta invariant `δ = #(ℕ \ Γ)`.
    pub fn delta(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// The smallest nonzero element `a_1`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Largest `n` the membership table answers for.
    pub fn bound(&self) -> u64 {
        (self.membership.len() - 1) as u64
    }

    /// True when `Γ = ℕ` (a smooth point).
    pub fn is_full(&self) -> bool {
        self.conductor == 0
    }

    /// Whether the stored table reaches the effective bound.
    pub fn certified(&self) -> bool {
        self.bound() >= self.effective_bound()
    }

    /// `(c-1)(a_1+2)`, the bound below which every decision of the tree and
    /// class algorithms takes place; 0 for the full semigroup.
    pub fn effective_bound(&self) -> u64 {
        effective_bound_for(self.conductor, self.multiplicity())
            .expect("checked at construction")
    }

    /// Membership query. Errors on `n > bound` rather than extrapolating.
    pub fn contains(&self, n: u64) -> Result<bool> {
        if n > self.bound() {
            return Err(Error::OutOfBound {
                n,
                bound: self.bound(),
            });
        }
        Ok(self.membership[n as usize])
    }

    /// Unchecked membership for internal loops; `n` must be `<= bound`.
    pub(crate) fn member(&self, n: u64) -> bool {
        debug_assert!(n <= self.bound());
        self.membership[n as usize]
    }

    /// Membership read off the exact gap list; valid for every `n`, used by
    /// the conductor-bounded scans below so they work on truncated tables.
    fn member_exact(&self, n: u64) -> bool {
        n >= self.conductor || self.gaps.binary_search(&n).is_err()
    }

    /// `c(x) = min{n : [n, ∞) ⊆ Γ ∪ (x + Γ)}` for a gap `x`.
    pub fn c_of_gap(&self, x: u64) -> Result<u64> {
        if self.member_exact(x) {
            return Err(Error::NotAGap { x });
        }
        // Above the conductor everything is in Γ, so scan below it for the
        // largest point missing from both Γ and x + Γ.
        for m in (0..self.conductor).rev() {
            let in_shift = m >= x && self.member_exact(m - x);
            if !self.member_exact(m) && !in_shift {
                return Ok(m + 1);
            }
        }
        Ok(0)
    }

    /// `c = 2δ`, equivalent to the local ring being Gorenstein.
    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.delta()
    }

    /// Match against the three closed monomial forms, trying the shapes in
    /// order and their parameters ascending. Returns the first match.
    pub fn classify_monomial(&self) -> MonomialForm {
        let c = self.conductor;
        if c == 0 {
            return MonomialForm::NotMonomial;
        }
        let agrees = |f: &dyn Fn(u64) -> bool| (0..=c).all(|n| f(n) == self.member_exact(n));

        // {im : i <= s} ∪ [sm+b, ∞); conductor is sm for b = 1, else sm+b.
        for m in 2..=c {
            for s in 1..=(c / m) {
                for b in 1..m {
                    let cand_c = if b == 1 { s * m } else { s * m + b };
                    if cand_c != c {
                        continue;
                    }
                    let f = |n: u64| (n <= s * m && n.is_multiple_of(m)) || n >= s * m + b;
                    if agrees(&f) {
                        return MonomialForm::Msb { m, s, b };
                    }
                }
            }
        }
        // {0} ∪ [m, m+r-1] ∪ [m+r+1, ∞); conductor m+r+1.
        for m in 3..=c.saturating_sub(3) {
            let r = c - m - 1;
            if r < 2 || r > m - 1 {
                continue;
            }
            let f = |n: u64| n == 0 || (n >= m && n < m + r) || n > m + r;
            if agrees(&f) {
                return MonomialForm::Mr { m, r };
            }
        }
        // {0, m} ∪ [m+2, 2m] ∪ [2m+2, ∞); conductor 2m+2.
        if c >= 8 && c.is_multiple_of(2) {
            let m = (c - 2) / 2;
            let f = |n: u64| n == 0 || n == m || (n >= m + 2 && n <= 2 * m) || n >= 2 * m + 2;
            if agrees(&f) {
                return MonomialForm::M { m };
            }
        }
        MonomialForm::NotMonomial
    }

    /// The gap-wise condition equivalent to being monomial:
    /// `Γ ∩ (x + Γ) ⊆ [c(x), ∞)` for every gap `x`. Used to cross-check
    /// [`classify_monomial`](Self::classify_monomial).
    pub fn satisfies_gap_condition(&self) -> bool {
        for &x in &self.gaps {
            let cx = self.c_of_gap(x).expect("x is a gap");
            // Offenders lie in Γ ∩ (x+Γ) below c(x) <= c.
            for m in x..self.conductor.min(cx) {
                if self.member_exact(m) && self.member_exact(m - x) {
                    return false;
                }
            }
        }
        true
    }
}

fn effective_bound_for(conductor: u64, multiplicity: u64) -> Result<u64> {
    if conductor == 0 {
        return Ok(0);
    }
    (conductor - 1)
        .checked_mul(multiplicity + 2)
        .ok_or(Error::Overflow {
            context: "effective bound (c-1)(a_1+2)",
        })
}
