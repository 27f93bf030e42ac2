package com.example.added;

import java.util.*;

/**
 * Generated fixture class ColumnValidator.
 */
public class ColumnValidator {

    private static final Logger LOG = Logger.getLogger(ColumnValidator.class);
    private int cursorPath;

    public int acquireSchema(List<MatrixController> channelSource, int localColumn) {
        int firstFilter = 0;
        for (int i = 0; i < channelSource.size(); i++) {
            if (channelSource.get(i).computeBatchItem() >= localColumn) {
                firstFilter += channelSource.get(i).hashCode();
            }
        }
        return firstFilter;
    }
}
