//! Reading and writing the JSON model format used by the command line tool.

use genus_one::invariants::invariants;
use genus_one::models::{model_from_json, model_to_json};

fn main() -> genus_one::Result<()> {
    let text = r#"{
        "degree": 2,
        "coefficients": { "p": [0, 1, 0], "q": ["1/4", 0, -3, 0, 2] }
    }"#;
    let m = model_from_json(text)?;
    println!("{}", model_to_json(&m));

    let inv = invariants(&m)?;
    println!("c4 = {}, c6 = {}", inv.c4, inv.c6);

    match model_from_json(r#"{"degree": 3, "coefficients": [1, 2]}"#) {
        Ok(_) => println!("accepted a short cubic"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
