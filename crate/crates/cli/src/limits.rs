use crate::error::{CliError, Result};

pub const DEFAULT_MAX_DEGREE: u32 = 64;
pub const MAX_DEGREE_VAR: &str = "IDEAL_INTERP_MAX_DEGREE";

/// Degree cap from `IDEAL_INTERP_MAX_DEGREE`, or 64 when unset.
pub fn max_degree_from_env() -> Result<u32> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::schema(format!("{MAX_DEGREE_VAR} must be a nonnegative integer, got '{v}'"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_DEGREE),
        Err(e) => Err(CliError::schema(format!("{MAX_DEGREE_VAR}: {e}"))),
    }
}

pub fn check_degree(what: &str, degree: u32, cap: u32) -> Result<()> {
    if degree > cap {
        return Err(CliError::schema(format!(
            "{what} {degree} exceeds the degree cap {cap} ({MAX_DEGREE_VAR})"
        )));
    }
    Ok(())
}
