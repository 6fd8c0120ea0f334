//! Reading Boolean functions from family files or raw bit files.

use std::io::Read;
use std::path::Path;

use twocoset::boolfn::{BooleanFunction, RawFunction};
use twocoset::domains::FamilyFile;
use twocoset::{Error, Result};

/// Parses either format; raw files are recognised by their `bits` field.
pub fn parse_function(text: &str) -> Result<BooleanFunction> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("bits").is_some() {
        let raw: RawFunction = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        BooleanFunction::from_raw(&raw)
    } else {
        let family: FamilyFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let domain = family.domain()?;
        BooleanFunction::indicator(domain, &family.members()?)
    }
}

/// `-` reads standard input.
pub fn read_function(path: &Path) -> Result<BooleanFunction> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    parse_function(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_formats() {
        let f = parse_function(r#"{"kind":"sym","n":3,"elements":[[1,2,3],[2,1,3]]}"#).unwrap();
        assert_eq!(f.weight(), 2);
        let raw = serde_json::to_string(&f.to_raw()).unwrap();
        assert_eq!(parse_function(&raw).unwrap(), f);
        assert!(matches!(parse_function("{"), Err(Error::Parse(_))));
        assert!(parse_function(r#"{"kind":"pm","n":2,"elements":[[[1,2],[1,3]]]}"#).is_err());
    }
}
