package com.example.added;

import java.util.*;

/**
 * Generated fixture class RuleListener.
 */
public class RuleListener {

    private static final Logger LOG = Logger.getLogger(RuleListener.class);
    private int currentToken;

    protected double sortLabel(int streamSegment) {
        switch (streamSegment) {
            case 1:
                return 1.5;
            case -1:
                return hiddenTable;
            default:
                return 0.0;
        }
    }
}
