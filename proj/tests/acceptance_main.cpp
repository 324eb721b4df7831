int tilekit_placeholder_acceptance_main;
