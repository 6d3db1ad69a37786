//! Brute-force caps: defaults, then an optional `key = value` file, then
//! `GCALC_CAP_*` environment variables.

use std::path::Path;

use anyhow::{bail, Context, Result};
use grammar_calculus::oracles::Caps;

const KEYS: [&str; 5] = ["permutations", "cops", "signed", "matchings", "depth"];

fn slot<'a>(caps: &'a mut Caps, key: &str) -> Option<&'a mut usize> {
    Some(match key {
        "permutations" => &mut caps.permutations,
        "cops" => &mut caps.cops,
        "signed" => &mut caps.signed,
        "matchings" => &mut caps.matchings,
        "depth" => &mut caps.depth,
        _ => return None,
    })
}

fn set(caps: &mut Caps, key: &str, value: &str, origin: &str) -> Result<()> {
    let Some(s) = slot(caps, key) else {
        bail!(
            "{origin}: unknown cap `{key}` (expected one of {})",
            KEYS.join(", ")
        );
    };
    *s = value.parse().with_context(|| {
        format!("{origin}: cap `{key}` needs a nonnegative integer, got `{value}`")
    })?;
    Ok(())
}

pub fn parse_config(text: &str, caps: &mut Caps, origin: &str) -> Result<()> {
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("{origin}:{}: expected `key = value`", no + 1);
        };
        set(caps, k.trim(), v.trim(), &format!("{origin}:{}", no + 1))?;
    }
    Ok(())
}

pub fn load_caps(file: Option<&Path>) -> Result<Caps> {
    let mut caps = Caps::default();
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        parse_config(&text, &mut caps, &path.display().to_string())?;
    }
    for key in KEYS {
        let var = format!("GCALC_CAP_{}", key.to_uppercase());
        if let Ok(v) = std::env::var(&var) {
            set(&mut caps, key, v.trim(), &var)?;
        }
    }
    Ok(caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_values_override_defaults() {
        let mut caps = Caps::default();
        parse_config(
            "# caps\ncops = 6\n\nmatchings=5 # smaller\n",
            &mut caps,
            "t",
        )
        .unwrap();
        assert_eq!(caps.cops, 6);
        assert_eq!(caps.matchings, 5);
        assert_eq!(caps.permutations, 9);
    }

    #[test]
    fn bad_lines_are_rejected() {
        let mut caps = Caps::default();
        assert!(parse_config("cops 6", &mut caps, "t").is_err());
        assert!(parse_config("colors = 3", &mut caps, "t").is_err());
        assert!(parse_config("cops = -1", &mut caps, "t").is_err());
    }
}
