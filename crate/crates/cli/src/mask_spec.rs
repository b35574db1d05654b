//! Mask mini-language for `--mask`:
//!
//! * `123` decimal encoding `sum c_i 2^i`
//! * `0x7b` hexadecimal encoding
//! * `zero`, `ones`
//! * `bit:k` only `c_k` set
//! * `period:<bits>:<p>` repeat a block of `p` bits; `<bits>` lists `c_0, c_1, ..`
//!   of the block as `0`/`1` characters, zero-padded to length `p`

use crate::error::{CliError, CliResult};
use num_bigint::BigUint;
use num_traits::Num;
use rotsym_core::StructuredMask;

pub fn parse_mask(spec: &str, n: usize) -> CliResult<StructuredMask> {
    let spec = spec.trim();
    let bad = |why: &str| CliError::usage(format!("malformed mask {spec:?}: {why}"));
    let mask = match spec {
        "zero" => StructuredMask::zero(n),
        "ones" => StructuredMask::ones(n),
        _ if spec.starts_with("bit:") => {
            let k: usize = spec[4..].parse().map_err(|_| bad("bit index is not an integer"))?;
            StructuredMask::single_bit(n, k).map_err(|e| bad(&e.to_string()))?
        }
        _ if spec.starts_with("period:") => {
            let mut parts = spec[7..].splitn(2, ':');
            let bits = parts.next().unwrap_or("");
            let p: usize = parts
                .next()
                .ok_or_else(|| bad("expected period:<bits>:<p>"))?
                .parse()
                .map_err(|_| bad("period is not an integer"))?;
            if p == 0 || bits.len() > p {
                return Err(bad("period must be positive and at least the block length"));
            }
            let mut block = bits
                .chars()
                .map(|ch| match ch {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(bad("block bits must be 0 or 1")),
                })
                .collect::<CliResult<Vec<bool>>>()?;
            block.resize(p, false);
            StructuredMask::periodic(n, block).map_err(|e| bad(&e.to_string()))?
        }
        _ => {
            let value = if let Some(hex) = spec.strip_prefix("0x").or_else(|| spec.strip_prefix("0X")) {
                BigUint::from_str_radix(hex, 16).map_err(|_| bad("invalid hexadecimal"))?
            } else {
                BigUint::from_str_radix(spec, 10).map_err(|_| bad("not a recognised mask form"))?
            };
            StructuredMask::from_biguint(n, &value).map_err(|e| bad(&e.to_string()))?
        }
    };
    Ok(mask)
}
