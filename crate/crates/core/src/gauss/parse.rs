use super::{GaussCode, GaussError, Passage, Role, Sign};

/// Parses the text form `O1+ U2+ ...; U3- O1+ ...`.
///
/// Components are separated by `;`, tokens by spaces, and `()` (or an empty
/// input) denotes a component without crossings.
pub fn parse_gauss(text: &str) -> Result<GaussCode, GaussError> {
    if text.trim().is_empty() {
        return Ok(GaussCode::unknot());
    }
    let mut components = Vec::new();
    let mut offset = 0;
    for chunk in text.split(';') {
        components.push(parse_component(chunk, offset)?);
        offset += chunk.len() + 1;
    }
    GaussCode::new(components)
}

fn parse_component(chunk: &str, offset: usize) -> Result<Vec<Passage>, GaussError> {
    let lead = chunk.len() - chunk.trim_start().len();
    let body = chunk.trim();
    if body == "()" {
        return Ok(Vec::new());
    }
    if body.is_empty() {
        return Err(GaussError::Syntax {
            pos: offset + lead,
            msg: "empty component (write `()` for a crossingless circle)".into(),
        });
    }
    let mut out = Vec::new();
    let mut i = 0;
    let bytes = body.as_bytes();
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        out.push(parse_token(&body[start..i], offset + lead + start)?);
    }
    Ok(out)
}

fn parse_token(tok: &str, pos: usize) -> Result<Passage, GaussError> {
    let err = |at: usize, msg: &str| GaussError::Syntax { pos: pos + at, msg: format!("{msg} in token `{tok}`") };
    let mut chars = tok.char_indices();
    let role = match chars.next() {
        Some((_, 'O')) => Role::Over,
        Some((_, 'U')) => Role::Under,
        _ => return Err(err(0, "expected `O` or `U`")),
    };
    let digits: String = tok[1..].chars().take_while(|c| c.is_ascii_digit()).collect();
    if digits.is_empty() {
        return Err(err(1, "expected crossing id"));
    }
    let id: u32 = digits.parse().map_err(|_| err(1, "crossing id out of range"))?;
    let rest = &tok[1 + digits.len()..];
    let sign = match rest {
        "+" => Sign::Pos,
        "-" => Sign::Neg,
        _ => return Err(err(1 + digits.len(), "expected `+` or `-`")),
    };
    Ok(Passage::new(id, role, sign))
}

pub(super) fn write_components(components: &[Vec<Passage>]) -> String {
    let mut s = String::new();
    for (i, c) in components.iter().enumerate() {
        if i > 0 {
            s.push(';');
        }
        if c.is_empty() {
            s.push_str("()");
        }
        for (j, p) in c.iter().enumerate() {
            if j > 0 {
                s.push(' ');
            }
            s.push_str(&p.to_string());
        }
    }
    s
}

/// Canonical text form.
pub fn serialize_gauss(code: &GaussCode) -> String {
    code.canonical_string()
}
