//! Content digests of canonicalized JSON, used to tie reports to their inputs.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Render a JSON value with recursively sorted object keys and no whitespace.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_canonical(v, &mut out);
    out
}

fn write_canonical(v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, k) in keys.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).unwrap());
                out.push(':');
                write_canonical(&map[*k], out);
            }
            out.push('}');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_canonical(item, out);
            }
            out.push(']');
        }
        other => out.push_str(&serde_json::to_string(other).unwrap()),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Digest of a serializable value: sha256 over its canonical JSON.
pub fn digest_of<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    sha256_hex(canonical_json(&v).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn key_order_does_not_matter() {
        let a = json!({"b": 1, "a": [1, 2, {"z": 0, "y": null}]});
        let b = json!({"a": [1, 2, {"y": null, "z": 0}], "b": 1});
        assert_eq!(canonical_json(&a), canonical_json(&b));
        assert_eq!(digest_of(&a), digest_of(&b));
    }

    #[test]
    fn floats_round_trip_stably() {
        let x = json!({"v": 0.1 + 0.2});
        let s = canonical_json(&x);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(canonical_json(&back), s);
    }
}
