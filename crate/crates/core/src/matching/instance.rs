use crate::error::{Error, Result};

/// Largest `n` accepted from an instance file.
pub const MAX_AGENTS: usize = 5000;

/// Complete preference profile of `n` boys and `n` girls.
///
/// Identifiers are 0-based here; files and messages use 1-based ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    boy_prefs: Vec<Vec<usize>>,
    girl_prefs: Vec<Vec<usize>>,
    boy_rank: Vec<Vec<usize>>,
    girl_rank: Vec<Vec<usize>>,
}

impl Instance {
    /// Builds an instance from 0-based preference rows, most preferred first.
    pub fn new(boy_prefs: Vec<Vec<usize>>, girl_prefs: Vec<Vec<usize>>) -> Result<Self> {
        let n = boy_prefs.len();
        if n == 0 {
            return Err(Error::InvalidArgument("instance must have n >= 1".into()));
        }
        if girl_prefs.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} boys but {} girls",
                n,
                girl_prefs.len()
            )));
        }
        let boy_rank = rank_table(&boy_prefs, "boy")?;
        let girl_rank = rank_table(&girl_prefs, "girl")?;
        Ok(Instance {
            boy_prefs,
            girl_prefs,
            boy_rank,
            girl_rank,
        })
    }

    pub fn n(&self) -> usize {
        self.boy_prefs.len()
    }

    pub fn boy_prefs(&self, boy: usize) -> &[usize] {
        &self.boy_prefs[boy]
    }

    pub fn girl_prefs(&self, girl: usize) -> &[usize] {
        &self.girl_prefs[girl]
    }

    /// 0-based position of `girl` in `boy`'s list (0 = favourite).
    #[inline]
    pub fn boy_rank(&self, boy: usize, girl: usize) -> usize {
        self.boy_rank[boy][girl]
    }

    /// 0-based position of `boy` in `girl`'s list (0 = favourite).
    #[inline]
    pub fn girl_rank(&self, girl: usize, boy: usize) -> usize {
        self.girl_rank[girl][boy]
    }

    #[inline]
    pub fn boy_prefers(&self, boy: usize, a: usize, b: usize) -> bool {
        self.boy_rank(boy, a) < self.boy_rank(boy, b)
    }

    #[inline]
    pub fn girl_prefers(&self, girl: usize, a: usize, b: usize) -> bool {
        self.girl_rank(girl, a) < self.girl_rank(girl, b)
    }
}

fn rank_table(prefs: &[Vec<usize>], side: &str) -> Result<Vec<Vec<usize>>> {
    let n = prefs.len();
    prefs
        .iter()
        .enumerate()
        .map(|(agent, row)| {
            inverse_permutation(row, n).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "preference row of {side} {} is not a permutation of 1..{n}",
                    agent + 1
                ))
            })
        })
        .collect()
}

fn inverse_permutation(row: &[usize], n: usize) -> Option<Vec<usize>> {
    if row.len() != n {
        return None;
    }
    let mut inv = vec![usize::MAX; n];
    for (pos, &x) in row.iter().enumerate() {
        if x >= n || inv[x] != usize::MAX {
            return None;
        }
        inv[x] = pos;
    }
    Some(inv)
}

/// Non-comment lines of `text` paired with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the line-oriented instance format: `n`, then `n` boy rows, then
/// `n` girl rows, each a permutation of `1..=n`.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let (first_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty instance file"))?;
    let n: usize = header.parse().map_err(|_| {
        Error::parse(
            first_line,
            format!("expected agent count, found `{header}`"),
        )
    })?;
    if !(1..=MAX_AGENTS).contains(&n) {
        return Err(Error::parse(
            first_line,
            format!("n = {n} out of range [1, {MAX_AGENTS}]"),
        ));
    }
    let mut rows = Vec::with_capacity(2 * n);
    let mut last_line = first_line;
    for (line_no, line) in lines {
        if rows.len() == 2 * n {
            return Err(Error::parse(line_no, "unexpected trailing content"));
        }
        rows.push(parse_row(line, n, line_no)?);
        last_line = line_no;
    }
    if rows.len() < 2 * n {
        return Err(Error::parse(
            last_line + 1,
            format!("expected {} preference rows, found {}", 2 * n, rows.len()),
        ));
    }
    let girl_prefs = rows.split_off(n);
    Instance::new(rows, girl_prefs)
}

fn parse_row(line: &str, n: usize, line_no: usize) -> Result<Vec<usize>> {
    let row = line
        .split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(id) if (1..=n).contains(&id) => Ok(id - 1),
            _ => Err(Error::parse(
                line_no,
                format!("`{tok}` is not an identifier in 1..{n}"),
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    if row.len() != n || inverse_permutation(&row, n).is_none() {
        return Err(Error::parse(
            line_no,
            format!("row is not a permutation of 1..{n}"),
        ));
    }
    Ok(row)
}

/// Writes an instance in the file format accepted by [`parse_instance`].
pub fn format_instance(inst: &Instance) -> String {
    let mut out = format!("{}\n", inst.n());
    let rows = (0..inst.n())
        .map(|b| inst.boy_prefs(b))
        .chain((0..inst.n()).map(|g| inst.girl_prefs(g)));
    for row in rows {
        let line: Vec<String> = row.iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// A perfect matching, stored as each boy's partner.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    partner_of_boy: Vec<usize>,
}

impl Matching {
    /// Fails unless `partner_of_boy` is a permutation of `0..len`.
    pub fn new(partner_of_boy: Vec<usize>) -> Result<Self> {
        let n = partner_of_boy.len();
        if inverse_permutation(&partner_of_boy, n).is_none() {
            return Err(Error::InvalidArgument(
                "matching is not a bijection between boys and girls".into(),
            ));
        }
        Ok(Matching { partner_of_boy })
    }

    pub(crate) fn from_vec_unchecked(partner_of_boy: Vec<usize>) -> Self {
        debug_assert!(inverse_permutation(&partner_of_boy, partner_of_boy.len()).is_some());
        Matching { partner_of_boy }
    }

    pub fn n(&self) -> usize {
        self.partner_of_boy.len()
    }

    #[inline]
    pub fn partner_of_boy(&self, boy: usize) -> usize {
        self.partner_of_boy[boy]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner_of_boy
    }

    /// The induced girl -> boy assignment.
    pub fn partner_of_girl(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (b, &g) in self.partner_of_boy.iter().enumerate() {
            inv[g] = b;
        }
        inv
    }

    pub fn contains(&self, boy: usize, girl: usize) -> bool {
        self.partner_of_boy[boy] == girl
    }

    /// `(boy, girl)` pairs in boy order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner_of_boy.iter().copied().enumerate()
    }
}
