//! Gauss-code text: `word := token*`, `token := 'b' | ('O'|'U') digits ('+'|'-')`.
//!
//! No separators are required. Whitespace is skipped between tokens but not
//! inside them.

use crate::diagram::{Entity, GaussCodeError, GaussDiagram, Label, Role, Sign};

pub fn parse_gauss_code(text: &str) -> Result<GaussDiagram, GaussCodeError> {
    let bytes = text.as_bytes();
    let mut entities = Vec::new();
    let mut i = 0;
    let lex = |pos: usize| GaussCodeError::Lex {
        pos,
        found: text[pos..].chars().next().map_or_else(|| "end of input".to_string(), |c| format!("{c:?}")),
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        match c {
            b'b' => {
                entities.push(Entity::Bar);
                i += 1;
            }
            b'O' | b'U' => {
                let role = if c == b'O' { Role::Tail } else { Role::Head };
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(lex(i));
                }
                let label: Label = text[start..i].parse().map_err(|_| lex(start))?;
                if label == 0 {
                    return Err(GaussCodeError::ZeroLabel);
                }
                let sign = match bytes.get(i) {
                    Some(b'+') => Sign::Positive,
                    Some(b'-') => Sign::Negative,
                    _ => return Err(lex(i)),
                };
                i += 1;
                entities.push(Entity::End { label, role, sign });
            }
            _ => return Err(lex(i)),
        }
    }
    GaussDiagram::from_entities(entities)
}

pub fn print_gauss_code(d: &GaussDiagram) -> String {
    d.to_string()
}
