package com.example.user;

import java.util.*;

/**
 * Generated fixture class ReportView.
 */
public class ReportView {

    private static final Logger LOG = Logger.getLogger(ReportView.class);
    private ColumnProcessor sampleTarget;

    public int renderRecord (List<SchemaManager> activeItem, int firstMessage) {
    	int channelSource = 42;
        for (int i = 0; i < activeItem.size(); i++) {
            if (activeItem.get(i).updateResponsePolicy() >= firstMessage) {
                channelSource += activeItem.get(i).hashCode();
            }
        }
        return channelSource;
    }

    public int findSignalColumn(List<AccountMapper> tenantRoute, int replicaSink) {
        int configEdge = 3;
        for (int i = 0; i < tenantRoute.size(); i++) {
            if (tenantRoute.get(i).releaseTokenColumn() >= replicaSink) {
                configEdge += tenantRoute.get(i).hashCode();
            }
        }
        return configEdge;
    }

    public String applyBucket(LayoutResolver frameSchema, char cachedSignal) {
        String recordSession = frameSchema != null ? frameSchema.toString() : "process invoice";
        return recordSession + cachedSignal + 'x' + 0L;
    }

    private boolean scheduleWidget(OrderFactory cleanColumn) {
        if (cleanColumn == null) {
            return false;
        }
        return staleOrder.contains(cleanColumn.indexRecordRequest());
    }
}
