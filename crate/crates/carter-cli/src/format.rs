//! Group file parsing and serialization.
//!
//! Two input shapes are accepted. Generator form:
//!
//! ```text
//! degree 4
//! (1 2)(3 4)
//! (1 2 3)
//! ```
//!
//! Cayley form: `cayley N` followed by an N by N table of 1-indexed
//! element numbers, a Latin square whose row and column 0 are the
//! identity. Points and elements are 1-indexed in files, 0-indexed in
//! memory. Lines starting with `#` carry free-form metadata and are
//! ignored by the parser apart from `# key: value` pairs.

use std::fmt;

use carter_core::{Group, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FileError {
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    DegreeMismatch {
        line: usize,
    },
    NotALatinSquare {
        line: usize,
    },
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at line {line}, column {column}: {message}"),
            FileError::DegreeMismatch { line } => {
                write!(f, "degree mismatch at line {line}")
            }
            FileError::NotALatinSquare { line } => {
                write!(f, "table is not a Latin square with identity first (line {line})")
            }
        }
    }
}

impl std::error::Error for FileError {}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A finite group given by its multiplication table. `table[i][j]` is
/// the index of the product of elements `i` and `j`; element 0 is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<u32>>,
}

impl CayleyTable {
    /// Validates the Latin square and identity conditions. Associativity
    /// is checked later, when the table is realized as permutations.
    pub fn new(table: Vec<Vec<u32>>) -> Result<CayleyTable, FileError> {
        let n = table.len();
        if n == 0 || n > u32::MAX as usize {
            return Err(parse_err(1, 1, "empty table"));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(FileError::NotALatinSquare { line: i + 1 });
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x as usize >= n || seen[x as usize] {
                    return Err(FileError::NotALatinSquare { line: i + 1 });
                }
                seen[x as usize] = true;
            }
            if table[i][0] != i as u32 || table[0][i] != i as u32 {
                return Err(FileError::NotALatinSquare { line: i + 1 });
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                let x = row[j] as usize;
                if seen[x] {
                    return Err(FileError::NotALatinSquare { line: j + 1 });
                }
                seen[x] = true;
            }
        }
        Ok(CayleyTable { table })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j] as usize
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.table
    }

    /// The regular permutation action: element `g` maps `x` to `x·g`.
    /// Rejects non-associative tables, whose column maps do not close
    /// under composition.
    pub fn to_group(&self) -> Result<Group, FileError> {
        let n = self.order();
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for j in 1..n {
            let images: Vec<u32> = (0..n).map(|i| self.table[i][j]).collect();
            gens.push(Perm::from_images(images).expect("columns are bijections"));
        }
        let g = Group::generate(n, &gens)
            .map_err(|_| parse_err(1, 1, "table rows disagree in size"))?;
        if g.order() != n as u64 {
            return Err(parse_err(1, 1, "table is not associative"));
        }
        Ok(g)
    }

    /// The multiplication table of an abstract copy of `g`, elements in
    /// sorted order. The identity sorts first, so it lands at index 0.
    pub fn from_perm_group(g: &Group) -> CayleyTable {
        let elements = g.sorted_elements();
        let n = elements.len();
        let index = |p: &Perm| {
            elements
                .binary_search(p)
                .expect("products stay inside the group")
        };
        let mut table = Vec::with_capacity(n);
        for a in &elements {
            let row: Vec<u32> = elements
                .iter()
                .map(|b| index(&a.compose(b)) as u32)
                .collect();
            table.push(row);
        }
        CayleyTable { table }
    }
}

/// A parsed group description: the original shape plus metadata pairs
/// from `# key: value` comment lines.
#[derive(Clone, Debug)]
pub struct GroupFile {
    pub id: String,
    pub source: GroupSource,
    pub metadata: Vec<(String, String)>,
}

#[derive(Clone, Debug)]
pub enum GroupSource {
    Generators { degree: usize, gens: Vec<Perm> },
    Cayley(CayleyTable),
}

impl GroupFile {
    pub fn group(&self) -> Result<Group, FileError> {
        match &self.source {
            GroupSource::Generators { degree, gens } => Group::generate(*degree, gens)
                .map_err(|e| parse_err(1, 1, format!("invalid generators: {e:?}"))),
            GroupSource::Cayley(t) => t.to_group(),
        }
    }
}

/// Parses one permutation in 1-indexed cycle notation, e.g.
/// `(1 2)(3 4)`. `()` and the empty string both denote the identity.
/// Commas are accepted as separators inside cycles.
pub fn parse_cycles(text: &str, degree: usize, line: usize) -> Result<Perm, FileError> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut seen = vec![false; degree];
    let mut cycle: Vec<u32> = Vec::new();
    let mut open = false;
    let mut chars = text.char_indices().peekable();
    while let Some((col, c)) = chars.next() {
        match c {
            '(' => {
                if open {
                    return Err(parse_err(line, col + 1, "nested parenthesis"));
                }
                open = true;
                cycle.clear();
            }
            ')' => {
                if !open {
                    return Err(parse_err(line, col + 1, "unmatched closing parenthesis"));
                }
                open = false;
                for w in 0..cycle.len() {
                    let from = cycle[w];
                    let to = cycle[(w + 1) % cycle.len()];
                    images[from as usize] = to;
                }
                cycle.clear();
            }
            ' ' | ',' | '\t' => {}
            '0'..='9' => {
                if !open {
                    return Err(parse_err(line, col + 1, "digit outside a cycle"));
                }
                let mut value: usize = c.to_digit(10).unwrap() as usize;
                while let Some(&(_, d)) = chars.peek() {
                    match d.to_digit(10) {
                        Some(v) => {
                            value = value * 10 + v as usize;
                            chars.next();
                        }
                        None => break,
                    }
                }
                if value == 0 {
                    return Err(parse_err(line, col + 1, "points are 1-indexed"));
                }
                if value > degree {
                    return Err(FileError::DegreeMismatch { line });
                }
                let point = (value - 1) as u32;
                if seen[point as usize] {
                    return Err(parse_err(
                        line,
                        col + 1,
                        format!("point {value} appears twice"),
                    ));
                }
                seen[point as usize] = true;
                cycle.push(point);
            }
            other => {
                return Err(parse_err(
                    line,
                    col + 1,
                    format!("unexpected character {other:?}"),
                ));
            }
        }
    }
    if open {
        return Err(parse_err(line, text.len(), "unclosed cycle"));
    }
    Perm::from_images(images).map_err(|_| parse_err(line, 1, "not a permutation"))
}

/// Renders a permutation in 1-indexed cycle notation; the identity is
/// `()`.
pub fn cycles_string(p: &Perm) -> String {
    let degree = p.degree();
    let mut seen = vec![false; degree];
    let mut out = String::new();
    for start in 0..degree as u32 {
        if seen[start as usize] || p.image(start) == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x as usize] = true;
            out.push_str(&(x + 1).to_string());
            x = p.image(x);
            if x == start {
                break;
            }
            out.push(' ');
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses a group file from text. The id defaults to `fallback_id` and
/// may be overridden by a `# id: name` metadata line.
pub fn parse_group_file(text: &str, fallback_id: &str) -> Result<GroupFile, FileError> {
    let mut metadata = Vec::new();
    let mut id = fallback_id.to_string();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(lineno, l)| {
            if let Some(rest) = l.strip_prefix('#') {
                if let Some((k, v)) = rest.split_once(':') {
                    metadata.push((k.trim().to_string(), v.trim().to_string()));
                }
                let _ = lineno;
                false
            } else {
                !l.is_empty()
            }
        })
        .collect::<Vec<_>>()
        .into_iter();
    for (k, v) in &metadata {
        if k == "id" {
            id = v.clone();
        }
    }
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let mut words = header.split_whitespace();
    let keyword = words.next().unwrap_or("");
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            parse_err(
                header_line,
                1,
                "header must be `degree N` or `cayley N` with N positive",
            )
        })?;
    if words.next().is_some() {
        return Err(parse_err(header_line, 1, "trailing tokens after header"));
    }
    let source = match keyword {
        "degree" => {
            let mut gens = Vec::new();
            for (lineno, l) in lines {
                gens.push(parse_cycles(l, n, lineno)?);
            }
            GroupSource::Generators { degree: n, gens }
        }
        "cayley" => {
            let mut table = Vec::with_capacity(n);
            for (lineno, l) in lines {
                let mut row = Vec::with_capacity(n);
                for w in l.split_whitespace() {
                    let v: usize = w
                        .parse()
                        .map_err(|_| parse_err(lineno, 1, format!("bad entry {w:?}")))?;
                    if v == 0 || v > n {
                        return Err(FileError::NotALatinSquare { line: lineno });
                    }
                    row.push((v - 1) as u32);
                }
                if row.len() != n {
                    return Err(FileError::NotALatinSquare { line: lineno });
                }
                table.push(row);
            }
            if table.len() != n {
                return Err(FileError::NotALatinSquare { line: header_line });
            }
            GroupSource::Cayley(CayleyTable::new(table)?)
        }
        other => {
            return Err(parse_err(
                header_line,
                1,
                format!("unknown header keyword {other:?}"),
            ));
        }
    };
    Ok(GroupFile {
        id,
        source,
        metadata,
    })
}

/// Serializes a description back to file text; `parse_group_file` of
/// the result yields an equal group.
pub fn serialize_group_file(file: &GroupFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("# id: {}\n", file.id));
    for (k, v) in &file.metadata {
        if k != "id" {
            out.push_str(&format!("# {k}: {v}\n"));
        }
    }
    match &file.source {
        GroupSource::Generators { degree, gens } => {
            out.push_str(&format!("degree {degree}\n"));
            for g in gens {
                out.push_str(&cycles_string(g));
                out.push('\n');
            }
        }
        GroupSource::Cayley(t) => {
            out.push_str(&format!("cayley {}\n", t.order()));
            for row in t.rows() {
                let words: Vec<String> = row.iter().map(|&x| (x + 1).to_string()).collect();
                out.push_str(&words.join(" "));
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generator_form_to_alt4() {
        let file = parse_group_file("degree 4\n(1 2)(3 4)\n(1 2 3)\n", "t").unwrap();
        let g = file.group().unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn trivial_group_from_empty_generator_list() {
        let g = parse_group_file("degree 1\n", "t").unwrap().group().unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn parses_klein_four_cayley_table() {
        let text = "cayley 4\n1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n";
        let g = parse_group_file(text, "v4").unwrap().group().unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.degree(), 4);
        assert!(g.is_abelian());
        assert!(g.elements().all(|x| x.order() <= 2));
    }

    #[test]
    fn metadata_lines_set_the_id() {
        let file = parse_group_file("# id: klein\n# note: a test\ndegree 1\n", "x").unwrap();
        assert_eq!(file.id, "klein");
        assert!(file.metadata.iter().any(|(k, v)| k == "note" && v == "a test"));
    }

    #[test]
    fn rejects_malformed_inputs() {
        let cases = [
            ("", "empty"),
            ("degree x\n", "bad degree"),
            ("degree 3\n(1 2", "unclosed"),
            ("degree 3\n(1 1)", "repeat"),
            ("degree 3\n(1 4)", "out of range"),
            ("cayley 2\n1 2\n1 2\n", "repeated column"),
            ("cayley 2\n1 2\n", "short table"),
            ("cayley 2\n2 1\n1 2\n", "identity not first"),
        ];
        for (text, why) in cases {
            assert!(parse_group_file(text, "t").and_then(|f| f.group()).is_err(), "{why}");
        }
        assert!(matches!(
            parse_group_file("degree 3\n(1 4)", "t").unwrap_err(),
            FileError::DegreeMismatch { line: 2 }
        ));
        assert!(matches!(
            parse_group_file("cayley 2\n1 2\n1 2\n", "t").unwrap_err(),
            FileError::NotALatinSquare { .. }
        ));
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // A Latin square with identity first that is not a group table:
        // smallest examples are quasigroups of order 5.
        let text = "cayley 5\n1 2 3 4 5\n2 1 4 5 3\n3 5 1 2 4\n4 3 5 1 2\n5 4 2 3 1\n";
        let file = parse_group_file(text, "t").unwrap();
        assert!(file.group().is_err());
    }

    #[test]
    fn cycle_notation_round_trips() {
        let g = parse_group_file("degree 5\n(1 2 3 4 5)\n(3 4)\n", "t")
            .unwrap()
            .group()
            .unwrap();
        for x in g.elements() {
            let s = cycles_string(&x);
            let back = parse_cycles(&s, 5, 1).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn serialized_files_parse_back_to_equal_groups() {
        let file = parse_group_file("degree 4\n(1 2 3 4)\n(1 3)\n", "d8").unwrap();
        let g = file.group().unwrap();
        let round = parse_group_file(&serialize_group_file(&file), "x").unwrap();
        assert_eq!(round.id, "d8");
        assert!(round.group().unwrap().equals(&g));
    }

    #[test]
    fn cayley_round_trip_through_regular_representation() {
        let g = parse_group_file("degree 3\n(1 2)\n(1 2 3)\n", "s3")
            .unwrap()
            .group()
            .unwrap();
        let table = CayleyTable::from_perm_group(&g);
        assert_eq!(table.order(), 6);
        let regular = table.to_group().unwrap();
        assert_eq!(regular.order(), 6);
        let table2 = CayleyTable::from_perm_group(&regular);
        assert_eq!(table, table2);
    }
}
