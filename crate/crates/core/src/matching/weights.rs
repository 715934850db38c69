use std::collections::BTreeSet;

use crate::decimal::{common_scale, format_scaled, parse_decimal, Decimal};
use crate::error::{Error, Result};
use crate::matching::instance::{content_lines, Instance, Matching};

/// Pair weights `w[b][g]` as integers over a common positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    n: usize,
    entries: Vec<i64>,
    scale: i64,
}

impl WeightFunction {
    /// `entries` is row-major, row = boy, column = girl.
    pub fn new(n: usize, entries: Vec<i64>, scale: i64) -> Result<Self> {
        if scale < 1 {
            return Err(Error::InvalidArgument(format!(
                "scale {scale} must be >= 1"
            )));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} weights, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(WeightFunction { n, entries, scale })
    }

    pub fn zero(n: usize) -> Self {
        WeightFunction {
            n,
            entries: vec![0; n * n],
            scale: 1,
        }
    }

    /// Integer weights from rows indexed `[boy][girl]`, scale 1.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("weight table must be n x n".into()));
        }
        Self::new(n, rows.concat(), 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    #[inline]
    pub fn get(&self, boy: usize, girl: usize) -> i64 {
        self.entries[boy * self.n + girl]
    }

    pub fn set(&mut self, boy: usize, girl: usize, value: i64) {
        self.entries[boy * self.n + girl] = value;
    }

    /// Entrywise sum; both operands must share `n` and `scale`.
    pub fn checked_add(&self, other: &WeightFunction) -> Result<WeightFunction> {
        if self.n != other.n || self.scale != other.scale {
            return Err(Error::InvalidArgument(
                "weight functions differ in size or scale".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Overflow("weight sum exceeds i64".into()))?;
        Ok(WeightFunction {
            n: self.n,
            entries,
            scale: self.scale,
        })
    }

    /// Entrywise negation.
    pub fn negated(&self) -> Result<WeightFunction> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.checked_neg())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Overflow("cannot negate i64::MIN".into()))?;
        Ok(WeightFunction { entries, ..*self })
    }

    /// Renders `value` (in this function's scaled domain) as an exact decimal.
    pub fn format(&self, value: i128) -> String {
        format_scaled(value, self.scale)
    }
}

/// Parses `n` rows of `n` decimals (row = boy, column = girl). All entries
/// share the power-of-ten scale of the most precise literal.
pub fn parse_weights(text: &str, n: usize) -> Result<WeightFunction> {
    let mut literals: Vec<(usize, Decimal)> = Vec::with_capacity(n * n);
    let mut rows = 0;
    let mut last_line = 0;
    for (line_no, line) in content_lines(text) {
        if rows == n {
            return Err(Error::parse(line_no, "unexpected trailing content"));
        }
        let before = literals.len();
        for tok in line.split_whitespace() {
            let d = parse_decimal(tok).map_err(|msg| Error::parse(line_no, msg))?;
            literals.push((line_no, d));
        }
        if literals.len() - before != n {
            return Err(Error::parse(
                line_no,
                format!("expected {n} weights, found {}", literals.len() - before),
            ));
        }
        rows += 1;
        last_line = line_no;
    }
    if rows < n {
        return Err(Error::parse(
            last_line + 1,
            format!("expected {n} weight rows, found {rows}"),
        ));
    }
    let decimals: Vec<Decimal> = literals.iter().map(|(_, d)| *d).collect();
    let overflow = |line| Error::parse(line, "weight does not fit the 64-bit scaled range");
    let (scaled, scale) = common_scale(&decimals).ok_or_else(|| overflow(literals[0].0))?;
    let entries = scaled
        .iter()
        .zip(&literals)
        .map(|(&v, &(line, _))| i64::try_from(v).map_err(|_| overflow(line)))
        .collect::<Result<Vec<_>>>()?;
    WeightFunction::new(n, entries, scale)
}

/// Writes `w` in the format read by [`parse_weights`].
pub fn format_weights(w: &WeightFunction) -> String {
    let mut out = String::new();
    for b in 0..w.n() {
        let row: Vec<String> = (0..w.n())
            .map(|g| w.format(i128::from(w.get(b, g))))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// `Σ w[b][m(b)]` in the scaled domain.
pub fn matching_weight(m: &Matching, w: &WeightFunction) -> Result<i128> {
    if m.n() != w.n() {
        return Err(Error::InvalidArgument(format!(
            "matching has n = {} but weights have n = {}",
            m.n(),
            w.n()
        )));
    }
    m.pairs().try_fold(0i128, |acc, (b, g)| {
        acc.checked_add(i128::from(w.get(b, g)))
            .ok_or_else(|| Error::Overflow("matching weight".into()))
    })
}

/// +1 on desirable pairs, -1 on undesirable pairs, 0 elsewhere.
pub fn preset_desirable_undesirable(
    inst: &Instance,
    desirable: &[(usize, usize)],
    undesirable: &[(usize, usize)],
) -> Result<WeightFunction> {
    let n = inst.n();
    let check = |&(b, g): &(usize, usize)| {
        if b >= n || g >= n {
            Err(Error::InvalidArgument(format!(
                "pair ({}, {}) outside 1..{n}",
                b + 1,
                g + 1
            )))
        } else {
            Ok((b, g))
        }
    };
    let good = desirable
        .iter()
        .map(check)
        .collect::<Result<BTreeSet<_>>>()?;
    let bad = undesirable
        .iter()
        .map(check)
        .collect::<Result<BTreeSet<_>>>()?;
    if let Some(&(b, g)) = good.intersection(&bad).next() {
        return Err(Error::InvalidArgument(format!(
            "pair ({}, {}) is both desirable and undesirable",
            b + 1,
            g + 1
        )));
    }
    let mut w = WeightFunction::zero(n);
    for &(b, g) in &good {
        w.set(b, g, 1);
    }
    for &(b, g) in &bad {
        w.set(b, g, -1);
    }
    Ok(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

/// `w[b][g] = rank_b(g) + rank_g(b)` with 1-based ranks, negated for
/// [`Sense::Minimize`] so that maximizing it minimizes the total rank sum.
pub fn preset_egalitarian(inst: &Instance, sense: Sense) -> WeightFunction {
    let n = inst.n();
    let sign = match sense {
        Sense::Maximize => 1,
        Sense::Minimize => -1,
    };
    let entries = (0..n)
        .flat_map(|b| (0..n).map(move |g| (b, g)))
        .map(|(b, g)| sign * (inst.boy_rank(b, g) + inst.girl_rank(g, b) + 2) as i64)
        .collect();
    WeightFunction {
        n,
        entries,
        scale: 1,
    }
}
