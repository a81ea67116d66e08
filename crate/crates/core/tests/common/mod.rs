//! Reference tables transcribed verbatim as LaTeX, and a small reader for them.
#![allow(dead_code)]

use ncmac::algebra::MultiPoly;
use ncmac::kostka::LabeledMatrix;
use ncmac::Composition;

pub const K2: &str = r"K_2=\begin{pmatrix}2 & 1 & q\cr 11 & 1 & t\end{pmatrix}";

pub const K3: &str = r"K_3=\begin{pmatrix}3& 1& q^{2}& q& q^{3}\cr {21}& 1& t& q& tq\cr
    {12}& 1& q& t& tq\cr {111}& 1& t^{2}& t& t^{3}\end{pmatrix}";

pub const K4: &str = r"K_4=\begin{pmatrix}
  4& 1& q^{3}& q^{2}& q^{5}& q& q^{4}& q^{3}& q^{6}\cr
{31}& 1& t& q^{2}& tq^{2}& q& tq& q^{3}& tq^{3}\cr {22}&
1& q^{2}& t& tq^{2}& q& q^{3}& tq& tq^{3}\cr {211}& 1& t^{
2}& t& t^{3}& q& t^{2}q& tq& t^{3}q\cr {13}& 1& q^{2}& q&
q^{3}& t& tq^{2}& tq& tq^{3}\cr {121}& 1& t^{2}& q& t^{2}
q& t& t^{3}& tq& t^{3}q\cr {112}& 1& q& t^{2}& t^{2}q& t&
tq& t^{3}& t^{3}q\cr {1111}& 1& t^{3}& t^{2}& t^{5}& t& t
^{4}& t^{3}& t^{6}\end{pmatrix}";

pub const K3_MULTI: &str = r"{\bf K}_3=
\left (\begin {array}{ccccc}
3& 1&{ q_2}&{ q_1}&{ q_1}\,{ q_2}
\\
21&1&{ t_1}&{ q_1}&{ q_1}\,{ t_1}
\\
12&1&{ q_1}&{ t_1}&{ q_1}\,{ t_1}
\\
111&1&{ t_2}&{ t_1}&{ t_1}\,{ t_2}\end {array}
\right )";

pub const K4_MULTI: &str = r"{\bf K}_4=
\left (\begin {array}{ccccccccc}
4 &1&{ q_3}&{ q_2}&{ q_2}\,{ q_3}
&{ q_1}&{ q_1}\,{ q_3}&{ q_1}\,{ q_2}&{ q_1}\,{ q_2}\,
{  q_3}\\
31&1&{ t_1}&{ q_2}&{ q_2}\,{ t_1}&
{  q_1}&{ q_1}\,{ t_1}&{ q_1}\,{ q_2}&{ q_1}\,{ q_2}\,
{  t_1}\\
22&1&{ q_2}&{ t_1}&{ q_2}\,{ t_1}&{
 q_1}&{ q_1}\,{ q_2}&{ q_1}\,{ t_1}&{ q_1}\,{ q_2}\,{
 t_1}\\
211&1&{ t_2}&{ t_1}&{ t_1}\,{ t_2}&{
 q_1}&{ q_1}\,{ t_2}&{ q_1}\,{ t_1}&{ q_1}\,{ t_1}\,{
 t_2}\\
13&1&{ q_2}&{ q_1}&{ q_1}\,{ q_2}&{
 t_1}&{ q_2}\,{ t_1}&{ q_1}\,{ t_1}&{ q_1}\,{ q_2}\,{
 t_1}\\
121&1&{ t_2}&{ q_1}&{ q_1}\,{ t_2}&{
 t_1}&{ t_1}\,{ t_2}&{ q_1}\,{ t_1}&{ q_1}\,{ t_1}\,{
 t_2}\\
112&1&{ q_1}&{ t_2}&{ q_1}\,{ t_2}&{
 t_1}&{ q_1}\,{ t_1}&{ t_1}\,{ t_2}&{ q_1}\,{ t_1}\,{
 t_2}\\
1111&1&{ t_3}&{ t_2}&{ t_2}\,{ t_3}&{
 t_1}&{ t_1}\,{ t_3}&{ t_1}\,{ t_2}&{ t_1}\,{ t_2}\,{
 t_3}
\end {array}\right )";

/// Coefficient of `F_J` in `P_I`, row `J` and column `I`.
pub const P3: &str = r"\begin{pmatrix}3& t^{2}& -tq^{2}& -t^{2}q& q^{2}\cr {21}& -t& t
& q& -q\cr {12}& -t& q^{2}& t^{2}& -q\cr {111}& 1& -1&
-1& 1\end{pmatrix}";

pub const P4: &str = r"\begin{pmatrix}4& t^{3}& -t^{2}q^{3}& -t^{3}q^{2}& tq^{4}& -t^{4}q
& t^{2}q^{3}& t^{3}q^{2}& -q^{3}\cr {31}& -t^{2}& t^{2}&
tq^{2}& -tq^{2}& t^{2}q& -t^{2}q& -q^{2}& q^{2}\cr {22}&
-t^{2}& tq^{3}& t^{3}& -tq^{2}& t^{2}q& -q^{3}& -t^{3}q& q^{
2}\cr {211}& t& -t& -t& t& -q& q& q& -q\cr {13}& -t^{2
}& tq^{3}& t^{2}q^{2}& -q^{4}& t^{4}& -t^{2}q^{2}& -t^{3}q&
q^{2}\cr {121}& t& -t& -q^{2}& q^{2}& -t^{2}& t^{2}& q& -
q\cr {112}& t& -q^{3}& -t^{2}& q^{2}& -t^{2}& q^{2}& t^{3
}& -q\cr {1111}& -1& 1& 1& -1& 1& -1& -1& 1\end{pmatrix}";

/// Denominators as listed, each shared by a pair `(L', L'')`.
pub const D3: &[(&str, &str, &str)] = &[("3", "21", "(t-q)(t-q^2)"), ("12", "111", "(t-q)(t^2-q)")];

pub const D4: &[(&str, &str, &str)] = &[
    ("4", "31", "(t-q)(t  -q^2)(t  -q^3)"),
    ("22", "211", "(t-q)(t  -q^2)(t^2-q^2)"),
    ("13", "121", "(t-q)(t^2-q)  (t^2-q^2)"),
    ("112", "1111", "(t-q)(t^2-1)  (t^3-q)"),
];

pub const H22_LAMBDA: &str = r"{\rm \tilde H}_{22}=& \Lambda^{1111}+(q-1)\Lambda^{211}+(t-1)\Lambda^{121}
             +(q^2-1)\Lambda^{112} \\
& + (q-1)(t-1)\Lambda^{31}+(q-1)(q^2-1)\Lambda^{22}+(t-1)(q^2-1)\Lambda^{13}\\
&
  +(q-1)(t-1)(q^2-1)\Lambda^4\,.";

/// The four coefficients of `H_12 K_2(A; 1, z_1)`, keyed by continuation.
pub const PRODUCT_12_2: &[(&str, &str)] = &[
    ("14", "(t_2-1)(t_2-z_1)/(t_2-q_2)(t_2-q_3)"),
    ("131", "(t_2-1)(z_1-q_3)/(t_2-q_2)(t_2-q_3)"),
    ("122", "(1-q_2)(t_3-z_1)/(t_2-q_2)(t_3-q_2)"),
    ("1211", "(1-q_2)(z_1-q_2)/(t_2-q_2)(t_3-q_2)"),
];

/// Drops grouping braces, keeping the ones that delimit exponents.
fn strip_braces(s: &str) -> String {
    let mut out = String::new();
    let mut stack = Vec::new();
    let mut prev = ' ';
    for c in s.chars() {
        match c {
            '{' => {
                let keep = prev == '^';
                stack.push(keep);
                if keep {
                    out.push(c);
                }
            }
            '}' => {
                if stack.pop().unwrap_or(false) {
                    out.push(c);
                }
            }
            _ => out.push(c),
        }
        if !c.is_whitespace() {
            prev = c;
        }
    }
    out
}

/// Rows of a `pmatrix` or `array` block as `(label, entries)`.
pub fn parse_table(src: &str) -> Vec<(Composition, Vec<MultiPoly>)> {
    let src = src.replace("\\begin {array}", "\\begin{array}").replace("\\end {array}", "\\end{array}");
    let body = if let Some(pos) = src.find("\\begin{pmatrix}") {
        &src[pos + "\\begin{pmatrix}".len()..src.find("\\end{pmatrix}").expect("end")]
    } else {
        let pos = src.find("\\begin{array}").expect("matrix body");
        let rest = &src[pos + "\\begin{array}".len()..];
        let rest = &rest[rest.find('}').expect("column spec") + 1..];
        &rest[..rest.find("\\end{array}").expect("end")]
    };
    let body = body.replace("\\cr", "\\\\");
    body.split("\\\\")
        .filter(|row| !row.trim().is_empty())
        .map(|row| {
            let row: String = strip_braces(row).chars().filter(|c| !c.is_whitespace()).collect();
            let mut cells = row.split('&');
            let label = comp(cells.next().expect("label"));
            let entries = cells.map(|c| c.parse::<MultiPoly>().unwrap_or_else(|e| panic!("{c}: {e}"))).collect();
            (label, entries)
        })
        .collect()
}

/// Compares a computed matrix with a reference table, returning mismatches.
pub fn table_mismatches(m: &LabeledMatrix, table: &[(Composition, Vec<MultiPoly>)]) -> Vec<String> {
    let mut out = Vec::new();
    if table.len() != m.order.len() {
        out.push(format!("row count {} vs {}", table.len(), m.order.len()));
        return out;
    }
    for (r, (label, row)) in table.iter().enumerate() {
        if *label != m.order[r] {
            out.push(format!("row {r}: label {label} vs {}", m.order[r]));
        }
        for (c, want) in row.iter().enumerate() {
            let got = &m.entries[(r, c)];
            if got != want {
                out.push(format!("({}, {}): {} vs {}", m.order[r], m.order[c], got, want));
            }
        }
    }
    out
}

/// Whitespace- and brace-insensitive form of a LaTeX fragment.
pub fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '&')).collect::<String>().replace("\\\\", "")
}

pub fn comp(s: &str) -> Composition {
    s.chars().map(|d| d.to_string()).collect::<Vec<_>>().join(",").parse().expect("composition")
}
