//! The definition file format: a JSON document declaring a field and a
//! list of objects (Hopf algebras, automorphisms, characters, group-likes,
//! modules, algebras) by structure constants. Names resolve in order of
//! appearance, scalars are decimal strings like "3" or "-1/2", and every
//! shape problem is reported with the object and field that caused it.

use std::path::Path;

use ydbrauer::hopf::verify_hopf;
use ydbrauer::io::{
    parse_definition, read_definition, resolve, serialize_definition,
};
use ydbrauer::yd::check_yd;
use ydbrauer::{Error, Result};

fn main() -> Result<()> {
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("defs/sweedler5.yd");
    let def = read_definition(&shipped)?;
    let corpus = resolve(&def)?;
    println!("loaded {}:", shipped.display());
    for (name, h) in &corpus.hopfs {
        println!("  hopf {name}: dim {}, axioms {}", h.dim(), verify_hopf(h).passed());
    }
    for (name, m) in &corpus.modules {
        println!("  module {name}: dim {}, compatible {}", m.dim(), check_yd(m)?.passed());
    }
    for name in corpus.automorphisms.keys() {
        println!("  automorphism {name}");
    }
    println!(
        "  characters: {}; grouplikes: {}; algebras: {}",
        corpus.characters.len(),
        corpus.grouplikes.len(),
        corpus.algebras.len()
    );

    // Serialization round-trips byte-exactly through the parser.
    let text = serialize_definition(&def);
    let again = parse_definition(&text)?;
    println!();
    println!("parse(serialize(doc)) == doc: {}", again == def);
    println!("document is {} bytes of json", text.len());

    // Malformed documents fail with a located error, not a panic. Here the
    // unit vector of a four-dimensional algebra is given three entries.
    let mut value: serde_json::Value = serde_json::from_str(&text).expect("just serialized");
    value["objects"][0]["unit"] = serde_json::json!(["1", "0", "0"]);
    let bad = serde_json::to_string(&value).expect("value is a document");
    match parse_definition(&bad) {
        Err(Error::Validation { location, message }) => {
            println!();
            println!("truncated unit vector is rejected:");
            println!("  location: {location}");
            println!("  message:  {message}");
        }
        other => println!("unexpected outcome: {other:?}"),
    }
    Ok(())
}
