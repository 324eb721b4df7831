int tilekit_placeholder_test_tile;
