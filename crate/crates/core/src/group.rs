//! Finite groups as dense multiplication tables.
//!
//! Elements are indexed `0..n` with the identity at index 0. Text formats and
//! user-facing messages are 1-based, so the identity appears there as index 1.
//!
//! Permutations compose left to right: in `a * b` the permutation `a` is
//! applied first. With this convention the built-in `symmetric:3` and the
//! shipped S3 fixture reproduce the usual printed Cayley tables.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest group order accepted by any constructor.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Tables up to this order get the O(n^3) associativity scan when loaded from
/// a file.
const FULL_CHECK_LIMIT: usize = 600;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    n: usize,
    labels: Vec<String>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    name: String,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidationLevel {
    /// Identity placement, Latin square and inverses.
    Fast,
    /// `Fast` plus associativity over all triples.
    Full,
}

/// One defect in a multiplication table. Indices are 0-based; `Display`
/// prints them 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { row: usize, col: usize, value: usize },
    IdentityRow { col: usize, value: usize },
    IdentityCol { row: usize, value: usize },
    LatinRow { row: usize, value: usize, cols: Vec<usize> },
    LatinCol { col: usize, value: usize, rows: Vec<usize> },
    NoInverse { elem: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        match self {
            Violation::OutOfRange { row, col, value } => {
                write!(f, "entry ({},{}) = {} out of range", row + 1, col + 1, value + 1)
            }
            Violation::IdentityRow { col, value } => {
                write!(f, "identity row: entry (1,{}) is {}", col + 1, value + 1)
            }
            Violation::IdentityCol { row, value } => {
                write!(f, "identity column: entry ({},1) is {}", row + 1, value + 1)
            }
            Violation::LatinRow { row, value, cols } => write!(
                f,
                "row {} repeats {} in columns {}",
                row + 1,
                value + 1,
                one(cols)
            ),
            Violation::LatinCol { col, value, rows } => write!(
                f,
                "column {} repeats {} in rows {}",
                col + 1,
                value + 1,
                one(rows)
            ),
            Violation::NoInverse { elem } => write!(f, "element {} has no two-sided inverse", elem + 1),
            Violation::NotAssociative { a, b, c } => {
                write!(f, "({0}*{1})*{2} != {0}*({1}*{2})", a + 1, b + 1, c + 1)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().take(8).map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))?;
        if self.violations.len() > 8 {
            write!(f, "; ... {} more", self.violations.len() - 8)?;
        }
        Ok(())
    }
}

/// Checks a raw `n x n` table (0-based entries). Used both for validation of
/// constructed groups and for tables read from files.
pub fn validate_table(n: usize, mul: &[u32], level: ValidationLevel) -> ValidationReport {
    let mut out = Vec::new();
    let at = |i: usize, j: usize| mul[i * n + j] as usize;
    let mut in_range = true;
    for i in 0..n {
        for j in 0..n {
            if at(i, j) >= n {
                out.push(Violation::OutOfRange { row: i, col: j, value: at(i, j) });
                in_range = false;
            }
        }
    }
    if !in_range {
        return ValidationReport { violations: out };
    }
    for j in 0..n {
        if n > 0 && at(0, j) != j {
            out.push(Violation::IdentityRow { col: j, value: at(0, j) });
        }
        if n > 0 && at(j, 0) != j {
            out.push(Violation::IdentityCol { row: j, value: at(j, 0) });
        }
    }
    for i in 0..n {
        let mut where_row: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut where_col: Vec<Vec<usize>> = vec![Vec::new(); n];
        for j in 0..n {
            where_row[at(i, j)].push(j);
            where_col[at(j, i)].push(j);
        }
        for (value, cols) in where_row.into_iter().enumerate() {
            if cols.len() > 1 {
                out.push(Violation::LatinRow { row: i, value, cols });
            }
        }
        for (value, rows) in where_col.into_iter().enumerate() {
            if rows.len() > 1 {
                out.push(Violation::LatinCol { col: i, value, rows });
            }
        }
    }
    for i in 0..n {
        let has = (0..n).any(|j| at(i, j) == 0 && at(j, i) == 0);
        if !has {
            out.push(Violation::NoInverse { elem: i });
        }
    }
    if level == ValidationLevel::Full {
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        out.push(Violation::NotAssociative { a, b, c });
                    }
                }
            }
        }
    }
    ValidationReport { violations: out }
}

impl Group {
    /// Builds a group from a 0-based table after fast validation.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, mul: Vec<u32>) -> Result<Self> {
        let n = labels.len();
        if mul.len() != n * n || n == 0 {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries for {} labels",
                mul.len(),
                n
            )));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::GroupTooLarge(DEFAULT_ORDER_CAP));
        }
        let report = validate_table(n, &mul, ValidationLevel::Fast);
        if !report.is_ok() {
            return Err(Error::InvalidGroup(report.to_string()));
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n).find(|&j| mul[i * n + j] == 0).expect("Latin rows contain the identity");
            inv[i] = j as u32;
        }
        Ok(Group { n, labels, mul, inv, name: name.into() })
    }

    /// Parses a group spec: `cyclic:n`, `dihedral:n`, `symmetric:n`,
    /// `product:<spec>,<spec>`, `cayley:<path>` or `perm:<path>`.
    pub fn from_spec(spec: &str) -> Result<Arc<Group>> {
        Self::parse_spec(spec.trim()).map(Arc::new)
    }

    fn parse_spec(spec: &str) -> Result<Group> {
        let bad = |msg: &str| Error::GroupSpec(spec.to_string(), msg.to_string());
        let (kind, arg) = spec.split_once(':').ok_or_else(|| bad("expected `kind:argument`"))?;
        let int = || arg.trim().parse::<usize>().map_err(|_| bad("expected an integer"));
        match kind {
            "cyclic" => {
                let n = int()?;
                if n < 1 {
                    return Err(bad("order must be at least 1"));
                }
                Group::cyclic(n)
            }
            "dihedral" => {
                let n = int()?;
                if n < 2 {
                    return Err(bad("dihedral:n needs n >= 2"));
                }
                Group::dihedral(n)
            }
            "symmetric" => {
                let n = int()?;
                if !(2..=8).contains(&n) {
                    return Err(bad("symmetric:n needs 2 <= n <= 8"));
                }
                Group::symmetric(n)
            }
            "product" => {
                // split at the first comma where both sides parse
                let mut last_err = bad("expected `product:<spec>,<spec>`");
                for (pos, _) in arg.match_indices(',') {
                    let (l, r) = (&arg[..pos], &arg[pos + 1..]);
                    match (Self::parse_spec(l), Self::parse_spec(r)) {
                        (Ok(a), Ok(b)) => return Group::product(&a, &b),
                        (Err(e), _) | (_, Err(e)) => last_err = e,
                    }
                }
                Err(last_err)
            }
            "cayley" => Group::read_cayley(Path::new(arg)),
            "perm" => Group::read_perm(Path::new(arg)),
            _ => Err(bad("unknown group kind")),
        }
    }

    pub fn cyclic(n: usize) -> Result<Group> {
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::GroupTooLarge(DEFAULT_ORDER_CAP));
        }
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let mul = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        Group::from_table(format!("cyclic:{n}"), labels, mul)
    }

    /// Dihedral group of order `2n`, elements `r^a s^e` ordered by `e` then `a`.
    pub fn dihedral(n: usize) -> Result<Group> {
        if 2 * n > DEFAULT_ORDER_CAP {
            return Err(Error::GroupTooLarge(DEFAULT_ORDER_CAP));
        }
        let size = 2 * n;
        let idx = |a: usize, e: usize| e * n + a;
        let labels = (0..size)
            .map(|k| {
                let (a, e) = (k % n, k / n);
                let r = match a {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{a}"),
                };
                match (r.is_empty(), e) {
                    (true, 0) => "1".to_string(),
                    (false, 0) => r,
                    (_, _) => format!("{r}s"),
                }
            })
            .collect();
        let mut mul = vec![0u32; size * size];
        for x in 0..size {
            let (a, e) = (x % n, x / n);
            for y in 0..size {
                let (b, f) = (y % n, y / n);
                let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                mul[x * size + y] = idx(rot, (e + f) % 2) as u32;
            }
        }
        Group::from_table(format!("dihedral:{n}"), labels, mul)
    }

    /// Symmetric group on `n` points, elements in lexicographic one-line order.
    pub fn symmetric(n: usize) -> Result<Group> {
        let order: usize = (1..=n).product();
        if order > DEFAULT_ORDER_CAP {
            return Err(Error::GroupTooLarge(DEFAULT_ORDER_CAP));
        }
        let mut perms = Vec::with_capacity(order);
        let mut cur: Vec<u32> = (0..n as u32).collect();
        loop {
            perms.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let mut g = Group::from_permutations(perms)?;
        g.name = format!("symmetric:{n}");
        Ok(g)
    }

    /// Direct product; pair `(i, j)` sits at index `j * |a| + i`, so the left
    /// factor varies fastest.
    pub fn product(a: &Group, b: &Group) -> Result<Group> {
        let (na, nb) = (a.n, b.n);
        let n = na * nb;
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::GroupTooLarge(DEFAULT_ORDER_CAP));
        }
        let labels = (0..n)
            .map(|k| format!("({},{})", a.labels[k % na], b.labels[k / na]))
            .collect();
        let mut mul = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let i = a.mul(x % na, y % na);
                let j = b.mul(x / na, y / na);
                mul[x * n + y] = (j * na + i) as u32;
            }
        }
        Group::from_table(format!("product:{},{}", a.name, b.name), labels, mul)
    }

    /// Breadth-first closure of `generators` (0-based one-line permutations of
    /// `n_points` points). Identity first, then discovery order.
    pub fn closure_from_generators(
        n_points: usize,
        generators: &[Vec<u32>],
        cap: usize,
    ) -> Result<Group> {
        for g in generators {
            check_permutation(n_points, g)?;
        }
        let identity: Vec<u32> = (0..n_points as u32).collect();
        let mut elems = vec![identity.clone()];
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elems.len() {
            let cur = elems[head].clone();
            head += 1;
            for g in generators {
                let next = compose(&cur, g);
                if !seen.contains_key(&next) {
                    if elems.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    seen.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
        }
        let mut g = Group::from_permutations(elems)?;
        g.name = format!("closure on {n_points} points");
        Ok(g)
    }

    fn from_permutations(perms: Vec<Vec<u32>>) -> Result<Group> {
        let n = perms.len();
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::GroupTooLarge(DEFAULT_ORDER_CAP));
        }
        let index: HashMap<&[u32], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut mul = vec![0u32; n * n];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                let c = compose(a, b);
                let k = *index.get(c.as_slice()).ok_or_else(|| {
                    Error::InvalidGroup("permutation set is not closed".to_string())
                })?;
                mul[i * n + j] = k as u32;
            }
        }
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Group::from_table("permutations", labels, mul)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of `g_i * g_j`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn validate(&self, level: ValidationLevel) -> ValidationReport {
        validate_table(self.n, &self.mul, level)
    }

    /// Table whose `(i, j)` entry is the index of `g_i^{-1} g_j`, row-major.
    pub fn modified_cayley(&self) -> Vec<u32> {
        let n = self.n;
        let mut t = vec![0u32; n * n];
        for i in 0..n {
            let row = self.inv(i) * n;
            t[i * n..(i + 1) * n].copy_from_slice(&self.mul[row..row + n]);
        }
        t
    }

    /// Re-indexes `self` to follow the element order of `order`, matching
    /// elements by label. Fails unless the two tables agree under that
    /// matching.
    pub fn reindexed(&self, order: &Group) -> Result<Group> {
        let fail = |msg: String| Error::InvalidGroup(format!("ordering file does not match {}: {msg}", self.name));
        if order.n != self.n {
            return Err(fail(format!("order {} vs {}", order.n, self.n)));
        }
        let mut to_self = Vec::with_capacity(self.n);
        for l in &order.labels {
            to_self.push(self.index_of(l).ok_or_else(|| fail(format!("unknown label `{l}`")))?);
        }
        let mut from_self = vec![usize::MAX; self.n];
        for (k, &s) in to_self.iter().enumerate() {
            if from_self[s] != usize::MAX {
                return Err(fail(format!("label `{}` repeated", self.labels[s])));
            }
            from_self[s] = k;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let expect = from_self[self.mul(to_self[i], to_self[j])];
                if order.mul(i, j) != expect {
                    return Err(fail(format!("entry ({},{}) disagrees", i + 1, j + 1)));
                }
            }
        }
        let mut g = order.clone();
        g.name = self.name.clone();
        Ok(g)
    }

    /// Reads the `.cayley` format: order, labels, then the 1-based table.
    pub fn parse_cayley(text: &str) -> std::result::Result<Group, String> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or("empty file")?
            .parse()
            .map_err(|_| "line 1: expected the group order")?;
        if n == 0 || n > DEFAULT_ORDER_CAP {
            return Err(format!("order {n} outside 1..={DEFAULT_ORDER_CAP}"));
        }
        let labels: Vec<String> = lines
            .next()
            .ok_or("missing label line")?
            .split_whitespace()
            .map(str::to_string)
            .collect();
        if labels.len() != n {
            return Err(format!("expected {n} labels, found {}", labels.len()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for r in 0..n {
            let line = lines.next().ok_or_else(|| format!("missing table row {}", r + 1))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<u32>().ok().filter(|&v| v >= 1 && v as usize <= n))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| format!("table row {}: entries must be integers in 1..={n}", r + 1))?;
            if row.len() != n {
                return Err(format!("table row {} has {} entries", r + 1, row.len()));
            }
            mul.extend(row.into_iter().map(|v| v - 1));
        }
        if lines.next().is_some() {
            return Err("trailing content after the table".to_string());
        }
        let level = if n <= FULL_CHECK_LIMIT {
            ValidationLevel::Full
        } else {
            ValidationLevel::Fast
        };
        let report = validate_table(n, &mul, level);
        if !report.is_ok() {
            return Err(format!("table fails validation: {report}"));
        }
        Group::from_table("cayley", labels, mul).map_err(|e| e.to_string())
    }

    pub fn read_cayley(path: &Path) -> Result<Group> {
        let text = fs::read_to_string(path).map_err(|e| Error::GroupFile {
            path: path.to_path_buf(),
            msg: e.to_string(),
        })?;
        let mut g = Group::parse_cayley(&text).map_err(|msg| Error::GroupFile {
            path: path.to_path_buf(),
            msg,
        })?;
        g.name = format!("cayley:{}", path.display());
        Ok(g)
    }

    pub fn to_cayley_string(&self) -> String {
        let mut s = format!("{}\n{}\n", self.n, self.labels.join(" "));
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| (self.mul(i, j) + 1).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Reads the `.perm` format: number of points, then one generator per
    /// line in 1-based one-line notation.
    pub fn parse_perm(text: &str) -> std::result::Result<Group, String> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n_points: usize = lines
            .next()
            .ok_or("empty file")?
            .parse()
            .map_err(|_| "line 1: expected the number of points")?;
        let mut gens = Vec::new();
        for (k, line) in lines.enumerate() {
            let perm = line
                .split_whitespace()
                .map(|t| t.parse::<u32>().ok().filter(|&v| v >= 1).map(|v| v - 1))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| format!("generator {}: expected positive integers", k + 1))?;
            gens.push(perm);
        }
        if gens.is_empty() {
            gens.push((0..n_points as u32).collect());
        }
        Group::closure_from_generators(n_points, &gens, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())
    }

    pub fn read_perm(path: &Path) -> Result<Group> {
        let text = fs::read_to_string(path).map_err(|e| Error::GroupFile {
            path: path.to_path_buf(),
            msg: e.to_string(),
        })?;
        let mut g = Group::parse_perm(&text).map_err(|msg| Error::GroupFile {
            path: path.to_path_buf(),
            msg,
        })?;
        g.name = format!("perm:{}", path.display());
        Ok(g)
    }
}

fn check_permutation(n_points: usize, p: &[u32]) -> Result<()> {
    if p.len() != n_points {
        return Err(Error::BadPermutation(format!(
            "expected {n_points} images, got {}",
            p.len()
        )));
    }
    let mut seen = vec![false; n_points];
    for &v in p {
        let v = v as usize;
        if v >= n_points || seen[v] {
            return Err(Error::BadPermutation(format!("{:?} is not a bijection", one_based(p))));
        }
        seen[v] = true;
    }
    Ok(())
}

fn one_based(p: &[u32]) -> Vec<u32> {
    p.iter().map(|v| v + 1).collect()
}

/// `a` then `b`.
fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("a larger element exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Cycle notation, e.g. `(12)(34)`; `1` for the identity. Points are
/// comma-separated once any exceeds 9.
fn cycle_label(p: &[u32]) -> String {
    let sep = if p.len() > 9 { "," } else { "" };
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cyc.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_from_product() {
        let k4 = Group::from_spec("product:cyclic:2,cyclic:2").unwrap();
        assert_eq!(k4.order(), 4);
        assert_eq!(k4.labels(), &["(1,1)", "(g,1)", "(1,g)", "(g,g)"]);
        // alpha * beta = alpha beta
        assert_eq!(k4.mul(1, 2), 3);
        assert!(k4.validate(ValidationLevel::Full).is_ok());
        assert_eq!(k4.modified_cayley(), k4.table());
    }

    #[test]
    fn symmetric_three() {
        let s3 = Group::from_spec("symmetric:3").unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.labels(), &["1", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        assert!(!s3.is_commutative());
        let report = s3.validate(ValidationLevel::Full);
        assert!(report.is_ok());
        // (12)(13): apply (12) first, 1->2->2, 2->1->3, 3->3->1 = (123)
        let p12 = s3.index_of("(12)").unwrap();
        let p13 = s3.index_of("(13)").unwrap();
        assert_eq!(s3.label(s3.mul(p12, p13)), "(123)");
    }

    #[test]
    fn trivial_group() {
        let g = Group::from_spec("cyclic:1").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.table(), &[0]);
    }

    #[test]
    fn orders_of_constructions() {
        for (spec, n) in [
            ("cyclic:12", 12),
            ("dihedral:4", 8),
            ("symmetric:4", 24),
            ("product:cyclic:3,dihedral:3", 18),
            ("product:product:cyclic:2,cyclic:2,cyclic:3", 12),
            ("product:cyclic:2,product:cyclic:2,cyclic:2", 8),
        ] {
            let g = Group::from_spec(spec).unwrap();
            assert_eq!(g.order(), n, "{spec}");
            assert!(g.validate(ValidationLevel::Full).is_ok(), "{spec}");
            let t = g.modified_cayley();
            for i in 0..n {
                assert_eq!(t[i * n + i], 0);
                let mut row: Vec<u32> = t[i * n..(i + 1) * n].to_vec();
                row.sort_unstable();
                assert!(row.iter().enumerate().all(|(k, &v)| v as usize == k));
            }
        }
        assert!(!Group::dihedral(4).unwrap().is_commutative());
        assert!(Group::dihedral(2).unwrap().is_commutative());
    }

    #[test]
    fn bad_specs() {
        for spec in ["cyclic:0", "cyclic:x", "dihedral:1", "symmetric:9", "wreath:3", "cyclic", "product:cyclic:2"] {
            assert!(matches!(Group::from_spec(spec), Err(Error::GroupSpec(..))), "{spec}");
        }
        assert!(matches!(Group::from_spec("symmetric:8"), Err(Error::GroupTooLarge(_))));
        assert!(matches!(
            Group::from_spec("cayley:/nonexistent/x.cayley"),
            Err(Error::GroupFile { .. })
        ));
    }

    #[test]
    fn modified_cayley_cyclic_three() {
        let c3 = Group::cyclic(3).unwrap();
        let t = c3.modified_cayley();
        // row of g, column of 1: g^{-1} = g^2
        assert_eq!(t[3], 2);
        assert_eq!(&t[0..3], &[0, 1, 2]);
    }

    #[test]
    fn closure_examples() {
        // (12) and (123), 0-based one-line
        let s3 = Group::closure_from_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_commutative());
        assert!(s3.validate(ValidationLevel::Full).is_ok());
        let triv = Group::closure_from_generators(3, &[vec![0, 1, 2]], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(triv.order(), 1);
        let c2 = Group::closure_from_generators(3, &[vec![1, 0, 2]], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(c2.order(), 2);
        assert!(matches!(
            Group::closure_from_generators(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 10),
            Err(Error::GroupTooLarge(10))
        ));
        assert!(matches!(
            Group::closure_from_generators(3, &[vec![0, 0, 2]], 100),
            Err(Error::BadPermutation(_))
        ));
    }

    #[test]
    fn corrupted_table_is_reported() {
        let k4 = Group::from_spec("product:cyclic:2,cyclic:2").unwrap();
        let mut t = k4.table().to_vec();
        // entry (3,2) (0-based) changed from 1 to 2
        t[3 * 4 + 2] = 2;
        let report = validate_table(4, &t, ValidationLevel::Fast);
        assert!(report.violations.iter().any(|v| matches!(v,
            Violation::LatinRow { row: 3, cols, .. } if cols.contains(&2))));
        assert!(report.violations.iter().any(|v| matches!(v, Violation::LatinCol { col: 2, .. })));
    }

    #[test]
    fn cayley_roundtrip_and_reindex() {
        let s3 = Group::symmetric(3).unwrap();
        let parsed = Group::parse_cayley(&s3.to_cayley_string()).unwrap();
        assert_eq!(parsed.table(), s3.table());
        let same = s3.reindexed(&parsed).unwrap();
        assert_eq!(same.table(), s3.table());
        let c6 = Group::cyclic(6).unwrap();
        assert!(c6.reindexed(&parsed).is_err());
    }

    #[test]
    fn cayley_parse_errors() {
        assert!(Group::parse_cayley("").is_err());
        assert!(Group::parse_cayley("2\na b\n1 2\n2 2\n").is_err());
        assert!(Group::parse_cayley("2\na b\n1 2\n").is_err());
        assert!(Group::parse_cayley("2\na\n1 2\n2 1\n").is_err());
        assert!(Group::parse_cayley("2\na b\n1 2\n2 1\n").is_ok());
    }

    #[test]
    fn perm_file() {
        let g = Group::parse_perm("4\n2 1 3 4\n2 3 4 1\n").unwrap();
        assert_eq!(g.order(), 24);
        assert!(Group::parse_perm("3\n1 1 2\n").is_err());
    }
}
