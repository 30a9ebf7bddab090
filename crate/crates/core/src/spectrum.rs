//! Bit-interleaving construction of a point from a source sequence `y` and coefficient expansions.
//!
//! Positions are 0-based and stage `j` owns `[h_{j-1}, h_j)` with `h_0 = 0`. Inside a stage the
//! positions below `⌊s·h_j⌋` copy `y` at the same position, and the rest follow the round-robin
//! pattern `a_1[0] a_2[0] … a_d[0] a_1[1] …`, restarting at bit 0 in every stage. The constant
//! coefficient `a_0` never contributes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::rational::{int, Rational};
use crate::{Error, Result};

/// Default ceiling on stage lengths, in bits.
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 20;

/// Read-only, 0-indexed binary sequence.
pub trait BitSource {
    /// `None` past the end of a finite source.
    fn bit(&self, index: usize) -> Option<bool>;
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BitString(pub Vec<bool>);

impl BitString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl BitSource for BitString {
    fn bit(&self, index: usize) -> Option<bool> {
        self.0.get(index).copied()
    }
}

impl<T: BitSource + ?Sized> BitSource for &T {
    fn bit(&self, index: usize) -> Option<bool> {
        (**self).bit(index)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBitsError(pub char);

impl fmt::Display for ParseBitsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid bit character {:?}", self.0)
    }
}

impl std::error::Error for ParseBitsError {}

/// Parses ASCII `0`/`1`, skipping whitespace.
impl FromStr for BitString {
    type Err = ParseBitsError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ParseBitsError(other)),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(BitString)
    }
}

/// Bits of the fractional part of `|q|`: bit `i` is the coefficient of `2^-(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryExpansion {
    frac: Rational,
}

impl BinaryExpansion {
    pub fn new(q: &Rational) -> Self {
        let a = q.abs();
        BinaryExpansion { frac: &a - a.floor() }
    }
}

impl BitSource for BinaryExpansion {
    fn bit(&self, index: usize) -> Option<bool> {
        let shifted = &self.frac * Rational::from_integer(BigInt::one() << (index + 1));
        Some(shifted.to_integer().is_odd())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageSchedule {
    stages: Vec<u64>,
    s: Rational,
}

impl StageSchedule {
    /// Validates `h_1 = 2`, `h_j ≥ 2^{h_{j-1}}` and `0 ≤ s ≤ 1`.
    pub fn new(stages: Vec<u64>, s: Rational) -> Result<Self> {
        if s.is_negative() || s > Rational::one() {
            return Err(Error::InvalidSchedule("s must lie in [0, 1]".into()));
        }
        match stages.first() {
            Some(2) => {}
            _ => return Err(Error::InvalidSchedule("first stage length must be 2".into())),
        }
        for w in stages.windows(2) {
            let admissible = w[0] < 64 && w[1] >= 1u64 << w[0];
            if !admissible {
                return Err(Error::InvalidSchedule(format!("{} < 2^{}", w[1], w[0])));
            }
        }
        Ok(StageSchedule { stages, s })
    }

    /// Minimal admissible growth: `h_1 = 2`, `h_j = 2^{h_{j-1}}`.
    pub fn minimal(stage_count: usize, s: Rational, budget: u64) -> Result<Self> {
        if stage_count == 0 {
            return Err(Error::InvalidSchedule("need at least one stage".into()));
        }
        let mut stages = vec![2u64];
        while stages.len() < stage_count {
            let prev = *stages.last().expect("non-empty");
            let next = if prev < 64 { 1u64 << prev } else { u64::MAX };
            if prev >= 64 || next > budget {
                return Err(Error::ScheduleOverflow { budget });
            }
            stages.push(next);
        }
        if stages[0] > budget {
            return Err(Error::ScheduleOverflow { budget });
        }
        StageSchedule::new(stages, s)
    }

    pub fn stages(&self) -> &[u64] {
        &self.stages
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn total_len(&self) -> u64 {
        *self.stages.last().expect("schedule is non-empty")
    }

    /// `(start, split, end)` of each stage: `y` fills `[start, split)`, coefficients `[split, end)`.
    pub fn segments(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        let mut prev = 0;
        self.stages.iter().map(move |&h| {
            let cut = (&self.s * int(h as i64)).floor().to_integer().to_u64().unwrap_or(0);
            let split = cut.clamp(prev, h);
            let seg = (prev, split, h);
            prev = h;
            seg
        })
    }
}

/// `h_1 = 2, h_j = 2^{h_{j-1}}` for `j ≤ stage_count`.
pub fn default_schedule(stage_count: usize, s: Rational, budget: u64) -> Result<StageSchedule> {
    StageSchedule::minimal(stage_count, s, budget)
}

/// Where a bit of the constructed point comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// `y` at this (absolute) position.
    Y(usize),
    /// Bit `bit` of coefficient `a_index`, `1 ≤ index ≤ d`.
    Coeff { index: usize, bit: usize },
}

/// Origins of the first `n` positions.
pub fn layout(sched: &StageSchedule, d: usize, n: usize) -> Vec<Origin> {
    let mut out = Vec::with_capacity(n);
    'stages: for (start, split, end) in sched.segments() {
        for pos in start..end {
            if out.len() == n {
                break 'stages;
            }
            let pos_us = pos as usize;
            if pos < split {
                out.push(Origin::Y(pos_us));
            } else {
                let offset = (pos - split) as usize;
                out.push(Origin::Coeff { index: 1 + offset % d, bit: offset / d });
            }
        }
    }
    out
}

/// First `n` bits of the constructed point.
pub fn interleave<Y, A>(y: &Y, coeff_bits: &[A], sched: &StageSchedule, n: usize) -> Result<BitString>
where
    Y: BitSource + ?Sized,
    A: BitSource,
{
    let d = coeff_bits.len();
    if d == 0 {
        return Err(Error::PreconditionViolated("need at least one coefficient source".into()));
    }
    check_length(sched, n)?;
    layout(sched, d, n)
        .into_iter()
        .map(|origin| match origin {
            Origin::Y(pos) => y.bit(pos).ok_or(Error::SourceExhausted { index: pos }),
            Origin::Coeff { index, bit } => {
                coeff_bits[index - 1].bit(bit).ok_or(Error::SourceExhausted { index: bit })
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(BitString)
}

fn check_length(sched: &StageSchedule, n: usize) -> Result<()> {
    let total = sched.total_len();
    if n as u64 > total {
        return Err(Error::LengthMismatch { expected: total as usize, actual: n });
    }
    Ok(())
}

/// A contiguous run of `y` bits starting at absolute position `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YFragment {
    pub start: usize,
    pub bits: BitString,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extracted {
    pub y_fragments: Vec<YFragment>,
    /// Longest prefix of each `a_1 … a_d` that appears in the input.
    pub coeff_prefixes: Vec<BitString>,
}

/// Inverse of [`interleave`]: splits a constructed bit string back into its sources.
pub fn extract_blocks(x: &BitString, sched: &StageSchedule, d: usize) -> Result<Extracted> {
    if d == 0 {
        return Err(Error::PreconditionViolated("need at least one coefficient".into()));
    }
    check_length(sched, x.len())?;
    let mut y_fragments: Vec<YFragment> = Vec::new();
    let mut coeff: Vec<Vec<Option<bool>>> = vec![Vec::new(); d];
    for (origin, &b) in layout(sched, d, x.len()).into_iter().zip(x.bits()) {
        match origin {
            Origin::Y(pos) => match y_fragments.last_mut() {
                Some(f) if f.start + f.bits.len() == pos => f.bits.0.push(b),
                _ => y_fragments.push(YFragment { start: pos, bits: BitString(vec![b]) }),
            },
            Origin::Coeff { index, bit } => {
                let slots = &mut coeff[index - 1];
                if slots.len() <= bit {
                    slots.resize(bit + 1, None);
                }
                match slots[bit] {
                    Some(prev) if prev != b => {
                        return Err(Error::InconsistentBits { coefficient: index, bit });
                    }
                    _ => slots[bit] = Some(b),
                }
            }
        }
    }
    let coeff_prefixes = coeff
        .into_iter()
        .map(|slots| BitString(slots.into_iter().map_while(|b| b).collect()))
        .collect();
    Ok(Extracted { y_fragments, coeff_prefixes })
}

/// Number of positions in each stage that come from `y`; the rest come from the coefficients.
pub fn y_bits_per_stage(sched: &StageSchedule) -> Vec<u64> {
    sched.segments().map(|(start, split, _)| split - start).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn default_schedules() {
        let s = ratio(1, 2);
        assert_eq!(default_schedule(3, s.clone(), DEFAULT_BIT_BUDGET).unwrap().stages(), &[2, 4, 16]);
        assert_eq!(default_schedule(1, s.clone(), DEFAULT_BIT_BUDGET).unwrap().stages(), &[2]);
        assert_eq!(default_schedule(4, s.clone(), DEFAULT_BIT_BUDGET).unwrap().stages(), &[2, 4, 16, 65536]);
        assert_eq!(default_schedule(5, s.clone(), DEFAULT_BIT_BUDGET), Err(Error::ScheduleOverflow { budget: DEFAULT_BIT_BUDGET }));
        assert_eq!(default_schedule(4, s, 1000), Err(Error::ScheduleOverflow { budget: 1000 }));
    }

    #[test]
    fn schedule_validation() {
        assert!(StageSchedule::new(vec![2, 4, 15], ratio(1, 2)).is_err());
        assert!(StageSchedule::new(vec![3, 8], ratio(1, 2)).is_err());
        assert!(StageSchedule::new(vec![2, 5, 40], ratio(3, 2)).is_err());
        assert!(StageSchedule::new(vec![2, 5, 40], ratio(3, 4)).is_ok());
        assert!(StageSchedule::new(vec![], ratio(1, 2)).is_err());
    }

    #[test]
    fn two_coefficient_trace() {
        let sched = StageSchedule::new(vec![2, 4], ratio(1, 2)).unwrap();
        let y = bits("0000");
        let a = [bits("1"), bits("0")];
        let x = interleave(&y, &a, &sched, 4).unwrap();
        // Stage 1: x[0] = y[0], x[1] = a1[0]; stage 2: y-segment [2, 2) is empty.
        assert_eq!(x, bits("0110"));
        assert_eq!(
            layout(&sched, 2, 4),
            vec![
                Origin::Y(0),
                Origin::Coeff { index: 1, bit: 0 },
                Origin::Coeff { index: 1, bit: 0 },
                Origin::Coeff { index: 2, bit: 0 },
            ]
        );
        let back = extract_blocks(&x, &sched, 2).unwrap();
        assert_eq!(back.coeff_prefixes, vec![bits("1"), bits("0")]);
        assert_eq!(back.y_fragments, vec![YFragment { start: 0, bits: bits("0") }]);
    }

    #[test]
    fn s_one_copies_y() {
        let sched = StageSchedule::new(vec![2, 4, 16], int(1)).unwrap();
        let y = bits("1011001110001101");
        let x = interleave(&y, &[BitString::default()], &sched, 16).unwrap();
        assert_eq!(x, y);
        let back = extract_blocks(&x, &sched, 1).unwrap();
        let joined: Vec<bool> = back.y_fragments.iter().flat_map(|f| f.bits.0.clone()).collect();
        assert_eq!(joined, y.0);
        assert!(back.coeff_prefixes[0].is_empty());
    }

    #[test]
    fn s_zero_is_pure_interleave() {
        let sched = StageSchedule::new(vec![2, 4], int(0)).unwrap();
        assert!(layout(&sched, 3, 4).iter().all(|o| matches!(o, Origin::Coeff { .. })));
        assert_eq!(y_bits_per_stage(&sched), vec![0, 0]);
    }

    #[test]
    fn empty_input() {
        let sched = StageSchedule::new(vec![2, 4], ratio(1, 2)).unwrap();
        let back = extract_blocks(&BitString::default(), &sched, 2).unwrap();
        assert!(back.y_fragments.is_empty());
        assert!(back.coeff_prefixes.iter().all(BitString::is_empty));
    }

    #[test]
    fn errors() {
        let sched = StageSchedule::new(vec![2, 4], ratio(1, 2)).unwrap();
        let y = bits("0");
        assert_eq!(interleave(&y, &[bits("1")], &sched, 4).unwrap_err(), Error::SourceExhausted { index: 1 });
        assert!(matches!(interleave(&bits("1111"), &[bits("11")], &sched, 5), Err(Error::LengthMismatch { .. })));
        assert!(matches!(extract_blocks(&bits("00000"), &sched, 2), Err(Error::LengthMismatch { .. })));
        // a1[0] appears at positions 1 and 2 and must agree.
        assert_eq!(
            extract_blocks(&bits("0100"), &sched, 2),
            Err(Error::InconsistentBits { coefficient: 1, bit: 0 })
        );
    }

    #[test]
    fn binary_expansion_bits() {
        let e = BinaryExpansion::new(&ratio(5, 8));
        let got: Vec<bool> = (0..5).map(|i| e.bit(i).unwrap()).collect();
        assert_eq!(got, vec![true, false, true, false, false]);
        let third = BinaryExpansion::new(&ratio(-7, 3));
        let got: Vec<bool> = (0..4).map(|i| third.bit(i).unwrap()).collect();
        assert_eq!(got, vec![false, true, false, true]);
    }

    #[test]
    fn bit_string_text() {
        assert_eq!(bits("01 1\n0").to_string(), "0110");
        assert_eq!("012".parse::<BitString>(), Err(ParseBitsError('2')));
    }
}
