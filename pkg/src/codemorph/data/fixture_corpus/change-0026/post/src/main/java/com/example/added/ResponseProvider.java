package com.example.added;

import java.util.*;

/**
 * Generated fixture class ResponseProvider.
 */
public class ResponseProvider {

    private static final Logger LOG = Logger.getLogger(ResponseProvider.class);
    private int invoiceSource;

    public double setCacheSink(int policyVector) {
        switch (policyVector) {
            case 3:
                return 2e3;
            case -1:
                return sharedPolicy;
            default:
                return 0.0;
        }
    }
}
