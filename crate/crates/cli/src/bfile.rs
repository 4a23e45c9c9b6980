//! OEIS b-file parsing. Data lines carry exactly two decimal tokens,
//! "index value"; '#' comment lines and blank lines are skipped. Indices
//! must run 1, 2, 3, ... with no gaps, which catches truncated or
//! reshuffled downloads.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: u64,
    pub value: u64,
}

pub fn parse(text: &str) -> Result<Vec<BFileEntry>, String> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(index_tok), Some(value_tok), None) =
            (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(format!("line {}: expected \"index value\"", lineno + 1));
        };
        let index: u64 = index_tok
            .parse()
            .map_err(|_| format!("line {}: bad index {index_tok:?}", lineno + 1))?;
        let value: u64 = value_tok
            .parse()
            .map_err(|_| format!("line {}: bad value {value_tok:?}", lineno + 1))?;
        let expected = entries.len() as u64 + 1;
        if index != expected {
            return Err(format!(
                "line {}: index {index} out of sequence (expected {expected})",
                lineno + 1
            ));
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}
