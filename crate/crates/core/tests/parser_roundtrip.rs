//! Printing an expression and reparsing it must reproduce the tree
//! exactly, for arbitrary trees.

use proptest::prelude::*;

use whitney::expr::{parse, Generator, GraphExpression};

fn arb_generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1u32..=6).prop_map(Generator::Complete),
        (3u32..=8).prop_map(Generator::Cycle),
        (1u32..=6).prop_map(Generator::Path),
        (1u32..=5).prop_map(Generator::Star),
        "[a-z][a-z0-9_./]{0,11}".prop_map(Generator::Load),
        (1u32..=8)
            .prop_flat_map(|n| {
                let max = n as u64 * (n as u64 - 1) / 2;
                (Just(n), 0..=max, 0u64..=999)
            })
            .prop_map(|(n, m, seed)| Generator::Random { n, m, seed }),
    ]
}

fn arb_expression() -> impl Strategy<Value = GraphExpression> {
    arb_generator()
        .prop_map(GraphExpression::Generator)
        .prop_recursive(5, 48, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|e| GraphExpression::Neg(Box::new(e))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| {
                    GraphExpression::Add(Box::new(a), Box::new(b))
                }),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| {
                    GraphExpression::Sub(Box::new(a), Box::new(b))
                }),
                (inner.clone(), inner).prop_map(|(a, b)| {
                    GraphExpression::Mul(Box::new(a), Box::new(b))
                }),
            ]
        })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(ast in arb_expression()) {
        let printed = ast.to_string();
        let reparsed = parse(&printed).expect("printed expressions parse");
        prop_assert_eq!(ast, reparsed, "printed form: {}", printed);
    }

    #[test]
    fn parsing_is_stable_under_whitespace(ast in arb_expression()) {
        let printed = ast.to_string();
        // pad every operator and bracket; identifiers, numbers and quoted
        // paths must stay intact
        let spaced: String = printed
            .chars()
            .flat_map(|c| match c {
                '(' | ')' | ',' | '+' | '-' | '*' => vec![' ', c, ' '],
                other => vec![other],
            })
            .collect();
        let reparsed = parse(&spaced).expect("spaced expressions parse");
        prop_assert_eq!(ast, reparsed);
    }
}
