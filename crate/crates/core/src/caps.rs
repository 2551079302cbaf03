/// Capacity limits for the enumeration procedures.
///
/// Exceeding a limit is reported as [`crate::Error::Capacity`]; nothing is
/// ever truncated silently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub ring_order: usize,
    pub module_order: usize,
    pub generators: usize,
    pub direct_sum_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring_order: 64,
            module_order: 64,
            generators: 4,
            direct_sum_order: 256,
        }
    }
}

impl Caps {
    pub fn check(what: &'static str, actual: usize, limit: usize) -> crate::Result<()> {
        if actual > limit {
            Err(crate::Error::Capacity { what, actual, limit })
        } else {
            Ok(())
        }
    }
}
