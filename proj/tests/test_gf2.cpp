int tilekit_placeholder_test_gf2;
