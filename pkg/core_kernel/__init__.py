"""Terms, global environment, typechecking and conversion."""
