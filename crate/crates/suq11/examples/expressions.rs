//! Parsing expressions, normalizing them, and round-tripping the canonical
//! renderings.

use suq11::forms::Form;
use suq11::parse::{parse, parse_form};

fn main() {
    println!("=== Parsing and normalizing ===");
    for input in [
        "a as",
        "q g a - a g",
        "(1 + q^2)^-1 g gs",
        "a^2 g - 3/5*q^2 gs",
        "em^ep + q^4 g gs e3",
    ] {
        let value = parse_form(input).unwrap();
        println!("{input:24} -> {value}");
    }

    println!("\n=== Frame words multiply by juxtaposition or ^ ===");
    let wedge = parse_form("em^ep").unwrap();
    assert_eq!(wedge, Form::dvol());
    assert_eq!(parse_form("em ep").unwrap(), wedge);
    assert!(parse_form("e3 e3").unwrap().is_zero());

    println!("em^ep       = {wedge}");
    println!("e3 e3       = {}", parse_form("e3 e3").unwrap());

    println!("\n=== Scalars live in the rational function field ===");
    println!("q^-3        = {}", parse_form("q^-3").unwrap());
    println!("6/2/3       = {}", parse_form("6/2/3").unwrap());
    println!("1/(1 + q^2) = {}", parse_form("1/(1 + q^2)").unwrap());

    println!("\n=== Errors carry byte positions ===");
    for bad in ["a + + g", "a $ g", "(a", "a / g"] {
        println!("{bad:8} -> {}", parse_form(bad).unwrap_err());
    }
    // the raw grammar is also available before evaluation
    assert!(parse("a ^ foo").is_err());

    println!("\n=== Canonical text parses back to the same element ===");
    let samples = [
        "1 + q^2 g gs",
        "(-q^6 - q^4) a^2",
        "as ep + (1)/(q^2 + 1) g e3",
        "-q^2 em^ep",
    ];
    for text in samples {
        let value = parse_form(text).unwrap();
        let rendered = value.to_string();
        assert_eq!(parse_form(&rendered).unwrap(), value);
        println!("{text:28} round trips");
    }
}
